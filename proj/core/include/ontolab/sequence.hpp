#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontolab/disc_geometry.hpp"

namespace ontolab {

/// An ordered, finite list of disc points with cached kernel norms
/// d(z_i) = ||k_{z_i}||^2.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<DiscPoint> points, std::string label = {});

  const std::vector<DiscPoint>& points() const { return points_; }
  const std::vector<double>& kernel_norms() const { return norms_; }
  const DiscPoint& operator[](std::size_t i) const { return points_[i]; }
  double kernel_norm(std::size_t i) const { return norms_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Bound on sum 1/d(z) over the points a truncated infinite family omits
  /// (+inf when that tail diverges); empty for finite families.
  const std::optional<double>& tail_bound() const { return tail_bound_; }
  void set_tail_bound(std::optional<double> bound) { tail_bound_ = bound; }

  void push_back(const DiscPoint& z);
  /// Points [first, size()).
  Sequence suffix(std::size_t first) const;
  /// Concatenation; labels are joined with '+'.
  friend Sequence concatenate(const Sequence& a, const Sequence& b);

 private:
  std::vector<DiscPoint> points_;
  std::vector<double> norms_;
  std::string label_;
  std::optional<double> tail_bound_;
};

/// V_gamma(z_i): indices j != i with |z_j| >= |z_i| whose expanded boxes
/// S^gamma meet S^gamma(z_i). When |z_j| = |z_i|, j is included iff j > i.
std::vector<std::size_t> vicinity(const Sequence& seq, std::size_t i, double gamma);

/// Members j of V_gamma(z_i) such that no other member k has
/// S^gamma(z_k) containing S(z_j).
std::vector<std::size_t> restricted_vicinity(const Sequence& seq, std::size_t i,
                                             double gamma);

struct NormalizeResult {
  Sequence sequence;
  std::size_t dropped = 0;  ///< length of the removed prefix
  std::vector<std::string> warnings;
};

/// Drops the shortest prefix after which, with gamma = (1 + beta) / 2:
///  * every d(z_i) > min_kernel_norm;
///  * z_j in V_eta(z_i) implies z_i not in S^eta(z_j) and
///    (1 - |z_j|)^beta <= 1 - |z_i|;
///  * z_j in V_gamma(z_i) implies 1 - |z_j| <= (1 - |z_i|) / 2.
/// Requires 0 < beta < eta < 1 (InputError otherwise).
NormalizeResult normalize(const Sequence& seq, double eta, double beta,
                          double min_kernel_norm = 100.0);

}  // namespace ontolab
