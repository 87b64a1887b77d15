#include "ontolab/equilibrium.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>

#include "ontolab/errors.hpp"
#include "ontolab/numerics.hpp"

namespace ontolab {

namespace {

constexpr double kPi = std::numbers::pi;

/// log(1 / tanh 1): the inner plate Delta_1(0) is the disc |z| <= tanh 1.
const double kInnerLog = -std::log(std::tanh(1.0));

/// -log|sin(delta / 2)| = log(2 / |zeta - zeta'|).
double log_kernel(double delta) {
  return -std::log(std::fabs(std::sin(0.5 * delta)));
}

/// -log(sin(u) / u), smooth for |u| < pi.
double log_sinc(double u) {
  if (std::fabs(u) < 1e-4) return u * u / 6.0;  // -log(1 - u^2/6 + ...)
  return -std::log(std::sin(u) / u);
}

/// sum_{n >= 1} 2 cos(n delta) / (n (e^{2 n L} + 1)), L = log(1 / tanh 1).
double annulus_series(double delta) {
  const std::complex<double> step = std::polar(1.0, delta);
  std::complex<double> e = step;
  double sum = 0.0;
  for (int n = 1; n < 400; ++n) {
    const double coeff = 2.0 / (n * (std::exp(2.0 * n * kInnerLog) + 1.0));
    sum += coeff * e.real();
    if (coeff < 1e-18) break;
    e *= step;
  }
  return sum;
}

/// The Green kernel of the condenser restricted to the circle, times pi, is
/// log_kernel + annulus_smooth.
double annulus_smooth(double delta) {
  return -std::log(2.0) + 0.5 * kInnerLog - annulus_series(delta);
}

struct Galerkin {
  std::vector<Arc> arcs;
  std::vector<double> center;     ///< arc centers relative to arcs[0] (rad)
  std::vector<double> half;       ///< half widths (rad)
  int modes = 0;
  int quad = 0;
  std::vector<double> x;          ///< Gauss-Chebyshev nodes on [-1, 1]
  Eigen::MatrixXd t;              ///< quad x modes, T_k(x_p)
  std::vector<std::vector<double>> coeff;
  double energy = 0.0;
  double condition = 1.0;
};

/// Minimizes the energy of log_kernel + smooth over probability measures on
/// the arcs.
Galerkin solve(std::span<const Arc> arcs, int modes,
               const std::function<double(double)>& smooth) {
  if (modes < 8) {
    throw InputError("equilibrium: need at least 8 modes per arc, got " +
                     std::to_string(modes));
  }
  if (modes > 256) throw InputError("equilibrium: at most 256 modes per arc");
  long double total = 0.0L;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].is_full()) throw InputError("equilibrium: arc covers the circle");
    total += arcs[i].length();
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs_overlap(arcs[i], arcs[j])) {
        throw InputError("equilibrium: arcs " + std::to_string(i) + " and " +
                         std::to_string(j) + " overlap");
      }
    }
  }
  if (total >= 1.0L) throw InputError("equilibrium: total arc length must be < 1");

  Galerkin g;
  g.arcs.assign(arcs.begin(), arcs.end());
  g.modes = modes;
  g.quad = 4 * modes;
  g.x = numerics::chebyshev_nodes(g.quad);
  g.t.resize(g.quad, modes);
  for (int p = 0; p < g.quad; ++p) {
    const double a = std::acos(g.x[p]);
    for (int k = 0; k < modes; ++k) g.t(p, k) = std::cos(k * a);
  }
  const std::size_t n_arcs = arcs.size();
  for (const auto& arc : arcs) {
    g.center.push_back(static_cast<double>(
        2.0L * std::numbers::pi_v<long double> *
        arcs[0].center().signed_difference(arc.center())));
    g.half.push_back(static_cast<double>(std::numbers::pi_v<long double> *
                                         arc.length()));
  }

  const std::size_t dim = n_arcs * modes;
  numerics::SymmetricSystem sys(dim);
  const double w = kPi / g.quad;
  Eigen::MatrixXd kern(g.quad, g.quad);
  for (std::size_t a = 0; a < n_arcs; ++a) {
    for (std::size_t b = a; b < n_arcs; ++b) {
      if (a == b) {
        const double h = g.half[a];
        for (int p = 0; p < g.quad; ++p) {
          for (int q = 0; q < g.quad; ++q) {
            const double d = h * (g.x[p] - g.x[q]);
            kern(p, q) = log_sinc(0.5 * d) + smooth(d);
          }
        }
      } else {
        for (int p = 0; p < g.quad; ++p) {
          for (int q = 0; q < g.quad; ++q) {
            const double d = (g.center[b] + g.half[b] * g.x[q]) -
                             (g.center[a] + g.half[a] * g.x[p]);
            kern(p, q) = log_kernel(d) + smooth(d);
          }
        }
      }
      const Eigen::MatrixXd block = (w * w) * (g.t.transpose() * kern * g.t);
      for (int k = 0; k < modes; ++k) {
        for (int l = 0; l < modes; ++l) {
          double v = block(k, l);
          if (a == b) {
            // -log(h/2) M_k M_l + int int -log|x - y| T_k T_l / weights.
            if (k == 0 && l == 0) {
              v += -std::log(0.5 * g.half[a]) * kPi * kPi +
                   kPi * kPi * std::log(2.0);
            } else if (k == l) {
              v += kPi * kPi / (2.0 * k);
            }
          }
          sys.at(a * modes + k, b * modes + l) = v;
          sys.at(b * modes + l, a * modes + k) = v;
        }
      }
    }
  }
  // Symmetrize self blocks exactly (quadrature round-off).
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double v = 0.5 * (sys.at(i, j) + sys.at(j, i));
      sys.at(i, j) = v;
      sys.at(j, i) = v;
    }
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < dim; ++i) trace += sys.at(i, i);
  for (std::size_t i = 0; i < dim; ++i) sys.at(i, i) += 1e-10 * trace;
  for (std::size_t a = 0; a < n_arcs; ++a) sys.rhs[a * modes] = kPi;

  numerics::SpdSolution sol;
  try {
    sol = numerics::solve_spd_with_estimate(sys);
  } catch (const DefinitenessError& e) {
    throw NumericalFailure(
        std::string("equilibrium: Galerkin system not positive definite (") +
            e.what() + ")",
        e.condition_estimate());
  }
  double mass_dot = 0.0;
  for (std::size_t a = 0; a < n_arcs; ++a) mass_dot += kPi * sol.x[a * modes];
  if (!(mass_dot > 0.0) || !std::isfinite(mass_dot)) {
    throw NumericalFailure("equilibrium: non-positive energy functional",
                           sol.condition_estimate);
  }
  g.energy = 1.0 / mass_dot;
  g.condition = sol.condition_estimate;
  g.coeff.assign(n_arcs, std::vector<double>(modes));
  for (std::size_t a = 0; a < n_arcs; ++a) {
    for (int k = 0; k < modes; ++k) {
      g.coeff[a][k] = sol.x[a * modes + k] * g.energy;
    }
  }
  return g;
}

}  // namespace

double EquilibriumMeasure::arc_mass(std::size_t a) const {
  return kPi * coefficients.at(a).at(0);
}

double EquilibriumMeasure::potential(double angle) const {
  const int modes = static_cast<int>(coefficients.front().size());
  const int quad = 4 * modes;
  const auto x = numerics::chebyshev_nodes(quad);
  const double w = kPi / quad;
  double total = 0.0;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto& c = coefficients[a];
    const double h = kPi * static_cast<double>(arcs[a].length());
    const double rel = std::remainder(angle - arcs[a].center_angle(), 2 * kPi);
    const double x0 = rel / h;
    auto density_poly = [&](double y) {
      const double t = std::acos(std::clamp(y, -1.0, 1.0));
      double s = 0.0;
      for (int k = 0; k < modes; ++k) s += c[k] * std::cos(k * t);
      return s;
    };
    if (std::fabs(x0) <= 1.0) {
      // Split -log|sin(h (x0 - y) / 2)| = -log(h/2) - log|x0 - y| + smooth.
      const double t0 = std::acos(x0);
      double singular = c[0] * (kPi * std::log(2.0) - kPi * std::log(0.5 * h));
      for (int k = 1; k < modes; ++k) {
        singular += c[k] * (kPi / k) * std::cos(k * t0);
      }
      double smooth = 0.0;
      for (int q = 0; q < quad; ++q) {
        smooth += log_sinc(0.5 * h * (x0 - x[q])) * density_poly(x[q]);
      }
      total += singular + w * smooth;
    } else {
      double s = 0.0;
      for (int q = 0; q < quad; ++q) {
        s += log_kernel(rel - h * x[q]) * density_poly(x[q]);
      }
      total += w * s;
    }
  }
  return total;
}

EquilibriumMeasure equilibrium_measure(std::span<const Arc> arcs,
                                       int modes_per_arc) {
  if (arcs.empty()) throw InputError("equilibrium: need at least one arc");
  const Galerkin g = solve(arcs, modes_per_arc, [](double) { return 0.0; });
  EquilibriumMeasure m;
  m.arcs = g.arcs;
  m.coefficients = g.coeff;
  m.energy = g.energy;
  m.condition_estimate = g.condition;
  const double w = kPi / g.quad;
  double total = 0.0;
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    const double c0 = g.arcs[a].center_angle();
    for (int p = 0; p < g.quad; ++p) {
      double v = 0.0;
      for (int k = 0; k < g.modes; ++k) v += g.coeff[a][k] * g.t(p, k);
      v = std::max(0.0, w * v);
      double angle = std::fmod(c0 + g.half[a] * g.x[p], 2 * kPi);
      if (angle < 0) angle += 2 * kPi;
      m.nodes.push_back(angle);
      m.weights.push_back(v);
      total += v;
    }
  }
  for (double& v : m.weights) v /= total;
  return m;
}

double full_circle_capacity() { return 2.0 * kPi / kInnerLog; }

double log_capacity(std::span<const Arc> arcs, int modes_per_arc) {
  if (arcs.empty()) return 0.0;
  const auto merged = merge_arcs(arcs);
  if (merged.size() == 1 && merged.front().is_full()) return full_circle_capacity();
  const Galerkin g = solve(merged, modes_per_arc, annulus_smooth);
  // The Green kernel is (log_kernel + annulus_smooth) / pi.
  return kPi / g.energy;
}

}  // namespace ontolab
