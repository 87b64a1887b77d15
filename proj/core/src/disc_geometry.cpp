#include "ontolab/disc_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ontolab/errors.hpp"

namespace ontolab {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kTwoPi = 2.0L * kPi;
constexpr long double kSeriesSwitch = 1e-4L;

/// Cancellation-free quantities for a pair (z, w). With delta = 1 - |.| and
/// psi = arg w - arg z, rho = |z||w| and A = 1 - rho:
///   |1 - conj(z) w|^2 = A^2 + 4 rho sin^2(psi / 2)
///   z - w = e^{i arg z} [(dw - dz) + 2 (1 - dw) sin^2(psi / 2)
///                        - i (1 - dw) sin psi]
struct Pair {
  long double dz, dw, psi, sin_psi, half_sq, rho, a;

  Pair(const DiscPoint& z, const DiscPoint& w)
      : dz(z.depth()), dw(w.depth()) {
    psi = kTwoPi * z.angle().signed_difference(w.angle());
    sin_psi = std::sin(psi);
    const long double h = std::sin(psi / 2);
    half_sq = h * h;
    rho = (1 - dz) * (1 - dw);
    a = dz + dw * (1 - dz);
  }

  /// |1 - conj(z) w|^2
  long double denominator_sq() const { return a * a + 4 * rho * half_sq; }
  long double diff_re() const { return (dw - dz) + 2 * (1 - dw) * half_sq; }
  long double diff_im() const { return -(1 - dw) * sin_psi; }
  /// |z - w|^2
  long double numerator_sq() const {
    const long double re = diff_re();
    const long double im = diff_im();
    return re * re + im * im;
  }
  /// 1 - |phi_z(w)|^2
  long double one_minus_p_sq() const {
    return dz * (2 - dz) * dw * (2 - dw) / denominator_sq();
  }
};

void require_finite_point(long double depth) {
  if (!(depth > 0.0L && depth <= 1.0L)) {
    throw DomainError("point must lie in the open unit disc");
  }
}

/// sum_{n >= 0} x^n / (n + 1) for small complex x.
std::complex<long double> log_series(std::complex<long double> x) {
  std::complex<long double> sum = 0.0L;
  std::complex<long double> term = 1.0L;
  for (int n = 0; n < 64; ++n) {
    const auto add = term / static_cast<long double>(n + 1);
    sum += add;
    if (std::abs(add) < 1e-22L * std::abs(sum)) break;
    term *= x;
  }
  return sum;
}

/// k(w, z) in long double.
std::complex<long double> kernel_ld(const DiscPoint& w, const DiscPoint& z) {
  const Pair p(z, w);  // psi = arg w - arg z, w conj(z) = rho e^{i psi}
  const std::complex<long double> x = std::polar(p.rho, p.psi);
  if (p.rho < kSeriesSwitch) return log_series(x);
  // 1 - x = (A + 2 rho sin^2(psi/2)) - i rho sin psi
  const long double re = p.a + 2 * p.rho * p.half_sq;
  const long double im = -p.rho * p.sin_psi;
  const long double mod_sq = p.denominator_sq();
  const long double log_mod_sq =
      (mod_sq > 0.5L && mod_sq < 2.0L)
          ? std::log1p(p.rho * p.rho - 2 * p.rho + 4 * p.rho * p.half_sq)
          : std::log(mod_sq);
  const std::complex<long double> minus_log(-0.5L * log_mod_sq,
                                            -std::atan2(im, re));
  return minus_log / x;
}

long double kernel_norm_sq_ld(const DiscPoint& z) {
  const long double d = z.depth();
  const long double r2 = (1 - d) * (1 - d);
  if (r2 < kSeriesSwitch) return log_series(r2).real();
  return -std::log(d * (2 - d)) / r2;
}

long double harmonic_measure_ld(const DiscPoint& z, const Arc& arc) {
  if (arc.is_full()) return 1.0L;
  const long double d = z.depth();
  const long double offset = kTwoPi * z.angle().signed_difference(arc.center());
  const long double len = kTwoPi * arc.length();
  const long double alpha = (offset - len / 2) / 2;
  const long double beta = (offset + len / 2) / 2;
  // Half the image arc under phi_z, from the arctangent antiderivative
  // 2 atan(k tan(v / 2)), k = (2 - d) / d, written branch-free and scaled
  // by d^2.
  const long double num = d * (2 - d) * std::sin(len / 2);
  const long double den = d * d * std::cos(alpha) * std::cos(beta) +
                          (2 - d) * (2 - d) * std::sin(alpha) * std::sin(beta);
  return std::atan2(num, den) / kPi;
}

void require_disjoint(std::span<const Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs_overlap(arcs[i], arcs[j])) {
        throw InputError("arcs " + std::to_string(i) + " and " +
                         std::to_string(j) + " overlap");
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DiscPoint

DiscPoint DiscPoint::from_cartesian(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("point coordinates must be finite");
  }
  const long double r = std::hypot(static_cast<long double>(re),
                                   static_cast<long double>(im));
  if (r >= 1.0L) throw DomainError("point must lie in the open unit disc");
  if (r == 0.0L) return DiscPoint();
  return DiscPoint(1.0L - r, Turns::from_radians(std::atan2(
                                 static_cast<long double>(im),
                                 static_cast<long double>(re))));
}

DiscPoint DiscPoint::from_polar(double r, double theta) {
  if (!std::isfinite(r) || !std::isfinite(theta) || r < 0.0) {
    throw DomainError("polar point needs finite r >= 0 and finite theta");
  }
  if (r >= 1.0) throw DomainError("point must lie in the open unit disc");
  if (r == 0.0) return DiscPoint();
  return DiscPoint(1.0L - r, Turns::from_radians(theta));
}

DiscPoint DiscPoint::from_depth(long double depth, const Turns& angle) {
  if (!std::isfinite(depth)) throw DomainError("depth must be finite");
  require_finite_point(depth);
  if (depth == 1.0L) return DiscPoint();
  return DiscPoint(depth, angle);
}

double DiscPoint::re() const {
  return static_cast<double>((1.0L - depth_) * std::cos(kTwoPi * angle_.value()));
}

double DiscPoint::im() const {
  return static_cast<double>((1.0L - depth_) * std::sin(kTwoPi * angle_.value()));
}

// ---------------------------------------------------------------------------
// Arc

Arc::Arc(const Turns& center, long double length)
    : center_(center), length_(length) {
  if (!(length > 0.0L && length <= 1.0L)) {
    throw InputError("arc length must lie in (0, 1]");
  }
  if (length_ == 1.0L) center_ = Turns();
}

Arc Arc::from_radians(double center_angle, double length) {
  return Arc(Turns::from_radians(center_angle), length);
}

// ---------------------------------------------------------------------------
// HyperbolicDisc

std::complex<double> HyperbolicDisc::euclidean_center() const {
  const double t = std::tanh(radius);
  const double r = center.radius();
  const double scale = (1 - t * t) / (1 - t * t * r * r);
  return center.to_complex() * scale;
}

double HyperbolicDisc::euclidean_radius() const {
  const long double t = std::tanh(static_cast<long double>(radius));
  const long double d = center.depth();
  const long double r = 1 - d;
  return static_cast<double>(t * d * (2 - d) / (1 - t * t * r * r));
}

bool HyperbolicDisc::contains(const DiscPoint& w) const {
  return hyperbolic_distance(center, w) < radius;
}

// ---------------------------------------------------------------------------
// Point maps and kernels

DiscPoint mobius(const DiscPoint& z, const DiscPoint& w) {
  if (z == w) return DiscPoint();
  if (z.is_origin()) return DiscPoint::from_depth(w.depth(), w.angle().shifted(0.5L));
  if (w.is_origin()) return z;
  const Pair p(z, w);
  const long double s = p.one_minus_p_sq();
  if (s >= 1.0L) return DiscPoint();
  const long double depth = s / (1 + std::sqrt(1 - s));
  const long double arg_num = std::atan2(p.diff_im(), p.diff_re());
  const long double arg_den =
      std::atan2(-p.rho * p.sin_psi, p.a + 2 * p.rho * p.half_sq);
  return DiscPoint::from_depth(depth,
                               z.angle().shifted((arg_num - arg_den) / kTwoPi));
}

std::complex<double> kernel(const DiscPoint& w, const DiscPoint& z) {
  const auto k = kernel_ld(w, z);
  return {static_cast<double>(k.real()), static_cast<double>(k.imag())};
}

double kernel_norm_sq(const DiscPoint& z) {
  return static_cast<double>(kernel_norm_sq_ld(z));
}

double dirichlet_metric(const DiscPoint& z, const DiscPoint& w) {
  if (z == w) return 0.0;
  const long double k = std::norm(kernel_ld(w, z));
  const long double ratio = k / (kernel_norm_sq_ld(z) * kernel_norm_sq_ld(w));
  return static_cast<double>(std::sqrt(std::max(0.0L, 1.0L - ratio)));
}

double pseudo_hyperbolic_distance(const DiscPoint& z, const DiscPoint& w) {
  if (z == w) return 0.0;
  const Pair p(z, w);
  return static_cast<double>(std::sqrt(p.numerator_sq() / p.denominator_sq()));
}

double hyperbolic_distance(const DiscPoint& z, const DiscPoint& w) {
  if (z == w) return 0.0;
  const Pair p(z, w);
  const long double rho = std::sqrt(p.numerator_sq() / p.denominator_sq());
  if (rho < 0.5L) return static_cast<double>(std::atanh(rho));
  const long double s = p.one_minus_p_sq();
  return static_cast<double>(0.5L * (2 * std::log1p(rho) - std::log(s)));
}

// ---------------------------------------------------------------------------
// Arcs and boxes

Arc boundary_arc(const DiscPoint& z) {
  if (z.is_origin()) throw DomainError("boundary arc of the origin is undefined");
  return Arc(z.angle(), z.depth());
}

CarlesonBox carleson_box(const DiscPoint& z) {
  if (z.is_origin()) return {Arc::full_circle(), 1.0L};
  return {boundary_arc(z), z.depth()};
}

CarlesonBox expanded_box(const DiscPoint& z, double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InputError("expanded box exponent must lie in (0, 1]");
  }
  const long double len = std::pow(z.depth(), static_cast<long double>(eta));
  return {Arc(z.angle(), len), len};
}

Arc arc_transform(const Arc& arc, double eta, double k) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InputError("arc_transform: eta must lie in (0, 1]");
  }
  if (!(k >= 1.0) || !std::isfinite(k)) {
    throw InputError("arc_transform: K must be finite and >= 1");
  }
  const long double len =
      k * std::pow(arc.length(), static_cast<long double>(eta));
  return Arc(arc.center(), std::min(1.0L, len));
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  if (a.is_full() || b.is_full()) return true;
  const long double d = std::fabs(a.center().signed_difference(b.center()));
  return d <= (a.length() + b.length()) / 2;
}

bool arcs_overlap(const Arc& a, const Arc& b) {
  if (a.is_full() || b.is_full()) return true;
  const long double d = std::fabs(a.center().signed_difference(b.center()));
  return d < (a.length() + b.length()) / 2;
}

bool arc_contains(const Arc& outer, const Arc& inner) {
  if (outer.is_full()) return true;
  if (inner.is_full()) return false;
  const long double d = std::fabs(outer.center().signed_difference(inner.center()));
  return d + inner.length() / 2 <= outer.length() / 2;
}

bool arc_contains_angle(const Arc& arc, const Turns& angle) {
  if (arc.is_full()) return true;
  return std::fabs(arc.center().signed_difference(angle)) <= arc.length() / 2;
}

bool boxes_intersect(const CarlesonBox& a, const CarlesonBox& b) {
  return arcs_intersect(a.base, b.base);
}

bool box_contains(const CarlesonBox& outer, const CarlesonBox& inner) {
  return inner.depth <= outer.depth && arc_contains(outer.base, inner.base);
}

bool box_contains_point(const CarlesonBox& box, const DiscPoint& w) {
  return w.depth() <= box.depth && arc_contains_angle(box.base, w.angle());
}

bool discs_intersect(const HyperbolicDisc& a, const HyperbolicDisc& b) {
  return hyperbolic_distance(a.center, b.center) < a.radius + b.radius;
}

bool disc_intersects_box(const HyperbolicDisc& disc, const CarlesonBox& box) {
  // Euclidean picture of the disc (center c, radius R), all in depths:
  //   1 - |c| = d (1 + t^2 r) / D,  R = t d (2 - d) / D,  D = 1 - t^2 r^2,
  // and its outermost point has depth d (1 - t)(1 - t r) / D.
  const long double t = std::tanh(static_cast<long double>(disc.radius));
  const long double d = disc.center.depth();
  const long double r = 1 - d;
  const long double big_d = 1 - t * t * r * r;
  const long double outer_depth = d * (1 - t) * (1 - t * r) / big_d;
  if (outer_depth >= box.depth) return false;
  if (box.base.is_full()) return true;
  const long double gap = std::max(
      0.0L, std::fabs(disc.center.angle().signed_difference(box.base.center())) -
                box.base.length() / 2);
  const long double c_depth = d * (1 + t * t * r) / big_d;
  const long double c = 1 - c_depth;
  const long double big_r = t * d * (2 - d) / big_d;
  if (big_r >= c) return true;  // the disc surrounds the origin
  // The angular half-width seen from 0 of the circle of radius rho inside the
  // disc is unimodal in rho with its maximum at rho* = sqrt(c^2 - R^2).
  const long double star_sq_gap = c_depth * (1 + c) + big_r * big_r;  // 1 - rho*^2
  const long double star_depth = star_sq_gap / (1 + std::sqrt(1 - star_sq_gap));
  const long double use_depth = std::min(box.depth, star_depth);
  const long double rho = 1 - use_depth;
  const long double diff = c_depth - use_depth;  // rho - c
  const long double sin_half_sq = (big_r * big_r - diff * diff) / (4 * rho * c);
  if (sin_half_sq <= 0.0L) return false;
  const long double width =
      2 * std::asin(std::sqrt(std::min(1.0L, sin_half_sq))) / kTwoPi;
  return gap < width;
}

std::vector<Arc> merge_arcs(std::span<const Arc> arcs) {
  std::vector<Arc> out;
  if (arcs.empty()) return out;
  for (const auto& a : arcs) {
    if (a.is_full()) return {Arc::full_circle()};
  }
  // Endpoints are kept as exact dyadic integers over a common exponent, so
  // arcs far shorter than a long double ulp of their position survive.
  const Turns ref = arcs.front().start();
  std::vector<std::pair<Turns, Turns>> exact;  // (start - ref, length)
  unsigned exponent = 0;
  for (const auto& a : arcs) {
    exact.emplace_back(a.start() - ref, Turns::from_fraction(a.length()));
    exponent = std::max({exponent, exact.back().first.exponent(),
                         exact.back().second.exponent()});
  }
  const auto scaled = [&](const Turns& t) { return t.numerator() << (exponent - t.exponent()); };
  struct Interval {
    BigInt s, e;
  };
  std::vector<Interval> iv;
  iv.reserve(arcs.size());
  for (const auto& [start, length] : exact) {
    const BigInt s = scaled(start);
    iv.push_back({s, s + scaled(length)});
  }
  std::sort(iv.begin(), iv.end(),
            [](const Interval& x, const Interval& y) { return x.s < y.s; });
  std::vector<Interval> merged;
  for (const auto& x : iv) {
    if (!merged.empty() && x.s <= merged.back().e) {
      merged.back().e = std::max(merged.back().e, x.e);
    } else {
      merged.push_back(x);
    }
  }
  // Wrap-around: the last interval may reach past one full turn.
  const BigInt one = BigInt(1) << exponent;
  bool changed = true;
  while (changed && merged.size() > 1) {
    changed = false;
    if (merged.back().e - one >= merged.front().s) {
      merged.front().s = std::min(merged.front().s, BigInt(merged.back().s - one));
      merged.front().e = std::max(merged.front().e, BigInt(merged.back().e - one));
      merged.pop_back();
      changed = true;
    }
    if (merged.size() > 1 && merged[1].s <= merged.front().e) {
      merged.front().e = std::max(merged.front().e, merged[1].e);
      merged.erase(merged.begin() + 1);
      changed = true;
    }
  }
  for (const auto& x : merged) {
    const BigInt len = x.e - x.s;
    if (len >= one) return {Arc::full_circle()};
    out.emplace_back(ref + Turns::dyadic(x.s + x.e, exponent + 1),
                     Turns::dyadic(len, exponent).value());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Harmonic measure

double harmonic_measure(const DiscPoint& z, std::span<const Arc> arcs) {
  require_disjoint(arcs);
  long double total = 0.0L;
  for (const auto& arc : arcs) total += harmonic_measure_ld(z, arc);
  return static_cast<double>(std::min(1.0L, total));
}

double harmonic_measure(const DiscPoint& z, const Arc& arc) {
  return static_cast<double>(harmonic_measure_ld(z, arc));
}

Turns mobius_boundary_angle(const DiscPoint& z, const Turns& angle) {
  if (z.is_origin()) return angle.shifted(0.5L);
  const long double d = z.depth();
  const long double u = kTwoPi * z.angle().signed_difference(angle);
  const long double h = std::sin(u / 2);
  const long double su = std::sin(u);
  // z - e^{iu} and 1 - conj(z) e^{iu}, both rotated by e^{-i arg z}.
  const long double arg_num = std::atan2(-su, -d + 2 * h * h);
  const long double arg_den = std::atan2(-(1 - d) * su, d + 2 * (1 - d) * h * h);
  return z.angle().shifted((arg_num - arg_den) / kTwoPi);
}

Arc mobius_arc_image(const DiscPoint& z, const Arc& arc) {
  if (arc.is_full()) return arc;
  const long double len = harmonic_measure_ld(z, arc);
  if (!(len > 0.0L)) {
    throw NumericalFailure("mobius_arc_image: image arc underflows", INFINITY);
  }
  const Turns start = mobius_boundary_angle(z, arc.start());
  return Arc(start.shifted(std::min(len, 1.0L) / 2), std::min(len, 1.0L));
}

}  // namespace ontolab
