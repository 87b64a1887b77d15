#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ontolab/turns.hpp"

namespace ontolab {

/// A point of the open unit disc, stored as its depth 1 - |z| (extended
/// exponent range) and an exact dyadic angle. Tree nodes thousands of levels
/// deep are represented without loss; re()/im() round to double.
class DiscPoint {
 public:
  /// The origin.
  DiscPoint() = default;

  static DiscPoint from_cartesian(double re, double im);
  static DiscPoint from_polar(double r, double theta);
  /// depth = 1 - |z| in (0, 1]; depth 1 is the origin.
  static DiscPoint from_depth(long double depth, const Turns& angle);

  long double depth() const { return depth_; }
  const Turns& angle() const { return angle_; }
  double radius() const { return static_cast<double>(1.0L - depth_); }
  double theta() const { return angle_.radians(); }
  double re() const;
  double im() const;
  std::complex<double> to_complex() const { return {re(), im()}; }
  bool is_origin() const { return depth_ == 1.0L; }

  friend bool operator==(const DiscPoint& a, const DiscPoint& b) {
    return a.depth_ == b.depth_ && a.angle_ == b.angle_;
  }

 private:
  DiscPoint(long double depth, Turns angle)
      : depth_(depth), angle_(std::move(angle)) {}

  long double depth_ = 1.0L;
  Turns angle_;
};

/// A closed boundary arc: center angle and normalized length in (0, 1]
/// (the whole circle has length 1).
class Arc {
 public:
  Arc(const Turns& center, long double length);
  static Arc from_radians(double center_angle, double length);
  static Arc full_circle() { return Arc(Turns(), 1.0L); }

  const Turns& center() const { return center_; }
  double center_angle() const { return center_.radians(); }
  long double length() const { return length_; }
  bool is_full() const { return length_ >= 1.0L; }
  /// Counter-clockwise endpoints.
  Turns start() const { return center_.shifted(-length_ / 2); }
  Turns end() const { return center_.shifted(length_ / 2); }

 private:
  Turns center_;
  long double length_;
};

/// {r e^{it} : 1 - depth <= r < 1, e^{it} in base}.
struct CarlesonBox {
  Arc base;
  long double depth;  ///< 1 - inner radius, in (0, 1]

  double inner_radius() const { return static_cast<double>(1.0L - depth); }
};

/// The hyperbolic disc {w : hyperbolic_distance(center, w) < radius}.
struct HyperbolicDisc {
  DiscPoint center;
  double radius = 1.0;

  /// Euclidean description: center and radius of the same set.
  std::complex<double> euclidean_center() const;
  double euclidean_radius() const;
  bool contains(const DiscPoint& w) const;
};

// ---------------------------------------------------------------------------
// Point maps and kernels

/// phi_z(w) = (z - w) / (1 - conj(z) w).
DiscPoint mobius(const DiscPoint& z, const DiscPoint& w);

/// k(w, z) = log(1 / (1 - w conj(z))) / (w conj(z)); 1 when w conj(z) = 0.
std::complex<double> kernel(const DiscPoint& w, const DiscPoint& z);

/// d(z) = ||k_z||^2 = log(1 / (1 - |z|^2)) / |z|^2.
double kernel_norm_sq(const DiscPoint& z);

/// sqrt(1 - |k(z, w)|^2 / (d(z) d(w))).
double dirichlet_metric(const DiscPoint& z, const DiscPoint& w);

/// |phi_z(w)|.
double pseudo_hyperbolic_distance(const DiscPoint& z, const DiscPoint& w);

/// 1/2 log((1 + p) / (1 - p)) with p = |phi_z(w)|.
double hyperbolic_distance(const DiscPoint& z, const DiscPoint& w);

// ---------------------------------------------------------------------------
// Arcs and boxes

/// I_z: centered at z / |z| with length 1 - |z|. Throws DomainError at 0.
Arc boundary_arc(const DiscPoint& z);

/// S(z) = {|w| >= |z|, w* in I_z}.
CarlesonBox carleson_box(const DiscPoint& z);

/// S^eta(z): arc and depth (1 - |z|)^eta, centered at z*.
CarlesonBox expanded_box(const DiscPoint& z, double eta);

/// K * I^eta: same center, length min(1, K |I|^eta).
Arc arc_transform(const Arc& arc, double eta, double k);

/// Closed arcs share at least one point.
bool arcs_intersect(const Arc& a, const Arc& b);
/// Arcs share an interval of positive length.
bool arcs_overlap(const Arc& a, const Arc& b);
/// outer contains inner.
bool arc_contains(const Arc& outer, const Arc& inner);
bool arc_contains_angle(const Arc& arc, const Turns& angle);

/// Boxes all reach the circle, so they meet iff their arcs meet.
bool boxes_intersect(const CarlesonBox& a, const CarlesonBox& b);
bool box_contains(const CarlesonBox& outer, const CarlesonBox& inner);
bool box_contains_point(const CarlesonBox& box, const DiscPoint& w);

bool discs_intersect(const HyperbolicDisc& a, const HyperbolicDisc& b);
bool disc_intersects_box(const HyperbolicDisc& disc, const CarlesonBox& box);

/// Union of arcs as a list of pairwise non-overlapping arcs (a single
/// full-circle arc when they cover T).
std::vector<Arc> merge_arcs(std::span<const Arc> arcs);

// ---------------------------------------------------------------------------
// Harmonic measure

/// omega(z, union of arcs): Poisson integral of the indicator of the arcs.
/// Throws InputError when two arcs overlap.
double harmonic_measure(const DiscPoint& z, std::span<const Arc> arcs);
double harmonic_measure(const DiscPoint& z, const Arc& arc);

/// Boundary angle of phi_z(e^{i angle}).
Turns mobius_boundary_angle(const DiscPoint& z, const Turns& angle);

/// The image arc phi_z(I). Its length equals omega(z, I); orientation is
/// preserved.
Arc mobius_arc_image(const DiscPoint& z, const Arc& arc);

}  // namespace ontolab
