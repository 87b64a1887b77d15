#include "ontolab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ontolab/errors.hpp"

namespace ontolab::numerics {

QuadratureRule gauss_legendre(int n) {
  if (n < 2 || n > 512) {
    throw InputError("gauss_legendre: n must lie in [2, 512], got " +
                     std::to_string(n));
  }
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on the three-term recurrence.
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) /
                             (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double step = p1 / dp;
      x -= step;
      if (std::fabs(step) < 1e-19L) break;
    }
    // Recompute the derivative at the converged node.
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>(-x);
    rule.nodes[n - 1 - i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(w);
    rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> nodes(n);
  for (int q = 0; q < n; ++q) {
    nodes[q] = -std::cos((2.0 * q + 1.0) * std::numbers::pi / (2.0 * n));
  }
  return nodes;
}

namespace {

void check_symmetric(const SymmetricSystem& s) {
  if (s.matrix.size() != s.dimension * s.dimension ||
      s.rhs.size() != s.dimension) {
    throw InputError("solve_spd: matrix/rhs size does not match dimension");
  }
  double scale = 0.0;
  for (double v : s.matrix) scale = std::max(scale, std::fabs(v));
  for (std::size_t i = 0; i < s.dimension; ++i) {
    for (std::size_t j = i + 1; j < s.dimension; ++j) {
      if (std::fabs(s.at(i, j) - s.at(j, i)) > 1e-13 * scale) {
        throw InputError("solve_spd: matrix is not symmetric at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

SpdSolution solve_spd_with_estimate(const SymmetricSystem& system) {
  check_symmetric(system);
  const std::size_t n = system.dimension;
  std::vector<double> l(system.matrix);
  double max_pivot = 0.0;
  double min_pivot = INFINITY;
  for (std::size_t j = 0; j < n; ++j) {
    double diag = l[j * n + j];
    for (std::size_t k = 0; k < j; ++k) diag -= l[j * n + k] * l[j * n + k];
    if (!(diag > 0.0)) {
      const double cond =
          min_pivot < INFINITY ? (max_pivot / min_pivot) * (max_pivot / min_pivot)
                               : INFINITY;
      throw DefinitenessError(
          "solve_spd: non-positive pivot at index " + std::to_string(j), j,
          cond);
    }
    const double ljj = std::sqrt(diag);
    l[j * n + j] = ljj;
    max_pivot = std::max(max_pivot, ljj);
    min_pivot = std::min(min_pivot, ljj);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = l[i * n + j];
      const double* li = &l[i * n];
      const double* lj = &l[j * n];
      for (std::size_t k = 0; k < j; ++k) v -= li[k] * lj[k];
      l[i * n + j] = v / ljj;
    }
  }
  SpdSolution out;
  out.x = system.rhs;
  auto& x = out.x;
  for (std::size_t i = 0; i < n; ++i) {
    double v = x[i];
    for (std::size_t k = 0; k < i; ++k) v -= l[i * n + k] * x[k];
    x[i] = v / l[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) v -= l[k * n + ii] * x[k];
    x[ii] = v / l[ii * n + ii];
  }
  out.condition_estimate =
      n == 0 ? 1.0 : (max_pivot / min_pivot) * (max_pivot / min_pivot);
  return out;
}

std::vector<double> solve_spd(const SymmetricSystem& system) {
  return solve_spd_with_estimate(system).x;
}

double residual_norm(const SymmetricSystem& system,
                     std::span<const double> x) {
  const std::size_t n = system.dimension;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = -system.rhs[i];
    for (std::size_t j = 0; j < n; ++j) r += system.at(i, j) * x[j];
    sum += r * r;
  }
  return std::sqrt(sum);
}

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
  bool exhausted = false;
};

double simpson_panel(SimpsonState& st, double a, double b, double fa,
                     double fm, double fb, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth >= st.max_depth) {
    st.exhausted = true;
    return left + right + delta / 15.0;
  }
  return simpson_panel(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_panel(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  SimpsonState st{f, max_depth};
  // Start from a handful of panels so narrow peaks are not skipped entirely.
  constexpr int kInitialPanels = 16;
  const double h = (b - a) / kInitialPanels;
  double total = 0.0;
  for (int p = 0; p < kInitialPanels; ++p) {
    const double lo = a + p * h;
    const double hi = p + 1 == kInitialPanels ? b : lo + h;
    const double flo = f(lo);
    const double fmid = f(0.5 * (lo + hi));
    const double fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += simpson_panel(st, lo, hi, flo, fmid, fhi, whole,
                           tol / kInitialPanels, 0);
  }
  if (!std::isfinite(total)) {
    throw AccuracyError("adaptive_integrate: integrand is not finite", total);
  }
  if (st.exhausted) {
    throw AccuracyError("adaptive_integrate: maximum depth exceeded", total);
  }
  return total;
}

}  // namespace ontolab::numerics
