#include "ontolab/sequence.hpp"

#include <algorithm>
#include <cmath>

#include "ontolab/errors.hpp"

namespace ontolab {

Sequence::Sequence(std::vector<DiscPoint> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  norms_.reserve(points_.size());
  for (const auto& z : points_) norms_.push_back(kernel_norm_sq(z));
}

void Sequence::push_back(const DiscPoint& z) {
  points_.push_back(z);
  norms_.push_back(kernel_norm_sq(z));
}

Sequence Sequence::suffix(std::size_t first) const {
  Sequence out;
  out.label_ = label_;
  out.tail_bound_ = tail_bound_;
  for (std::size_t i = std::min(first, size()); i < size(); ++i) {
    out.points_.push_back(points_[i]);
    out.norms_.push_back(norms_[i]);
  }
  return out;
}

Sequence concatenate(const Sequence& a, const Sequence& b) {
  Sequence out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    out.points_.push_back(b.points_[i]);
    out.norms_.push_back(b.norms_[i]);
  }
  if (a.label_.empty() || b.label_.empty()) {
    out.label_ = a.label_ + b.label_;
  } else {
    out.label_ = a.label_ + "+" + b.label_;
  }
  if (a.tail_bound_ || b.tail_bound_) {
    out.tail_bound_ = a.tail_bound_.value_or(0.0) + b.tail_bound_.value_or(0.0);
  }
  return out;
}

namespace {

void check_exponent(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InputError("vicinity exponent must lie in (0, 1)");
  }
}

/// z_j is at least as deep as z_i, with index tie-breaking.
bool deeper(const Sequence& seq, std::size_t i, std::size_t j) {
  const long double di = seq[i].depth();
  const long double dj = seq[j].depth();
  return dj < di || (dj == di && j > i);
}

bool in_vicinity(const Sequence& seq, std::size_t i, std::size_t j,
                 const CarlesonBox& box_i, double gamma) {
  if (j == i || !deeper(seq, i, j)) return false;
  return boxes_intersect(box_i, expanded_box(seq[j], gamma));
}

}  // namespace

std::vector<std::size_t> vicinity(const Sequence& seq, std::size_t i, double gamma) {
  check_exponent(gamma);
  if (i >= seq.size()) throw InputError("vicinity: index out of range");
  const CarlesonBox box_i = expanded_box(seq[i], gamma);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (in_vicinity(seq, i, j, box_i, gamma)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> restricted_vicinity(const Sequence& seq, std::size_t i,
                                             double gamma) {
  const auto v = vicinity(seq, i, gamma);
  std::vector<CarlesonBox> expanded;
  expanded.reserve(v.size());
  for (std::size_t j : v) expanded.push_back(expanded_box(seq[j], gamma));
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const CarlesonBox box = carleson_box(seq[v[a]]);
    bool covered = false;
    for (std::size_t b = 0; b < v.size() && !covered; ++b) {
      if (b != a && box_contains(expanded[b], box)) covered = true;
    }
    if (!covered) out.push_back(v[a]);
  }
  return out;
}

NormalizeResult normalize(const Sequence& seq, double eta, double beta,
                          double min_kernel_norm) {
  if (!(beta > 0.0 && beta < eta && eta < 1.0)) {
    throw InputError("normalize: need 0 < beta < eta < 1");
  }
  const double gamma = (1.0 + beta) / 2.0;
  const std::size_t n = seq.size();
  // Every condition involves one point or one pair, so the shortest valid
  // prefix to drop ends just after the latest "earlier member" of a violation.
  std::size_t cut = 0;
  std::vector<CarlesonBox> box_eta, box_gamma;
  for (std::size_t i = 0; i < n; ++i) {
    box_eta.push_back(expanded_box(seq[i], eta));
    box_gamma.push_back(expanded_box(seq[i], gamma));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(seq.kernel_norm(i) > min_kernel_norm)) cut = std::max(cut, i + 1);
    const long double di = seq[i].depth();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !deeper(seq, i, j)) continue;
      const long double dj = seq[j].depth();
      bool bad = false;
      if (boxes_intersect(box_eta[i], box_eta[j])) {
        if (box_contains_point(box_eta[j], seq[i])) bad = true;
        if (std::pow(dj, static_cast<long double>(beta)) > di) bad = true;
      }
      if (boxes_intersect(box_gamma[i], box_gamma[j]) && 2 * dj > di) bad = true;
      if (bad) cut = std::max(cut, std::min(i, j) + 1);
    }
  }
  NormalizeResult out{seq.suffix(cut), cut, {}};
  if (out.sequence.empty() && n > 0) {
    out.warnings.push_back("normalize: every point was dropped");
  }
  return out;
}

}  // namespace ontolab
