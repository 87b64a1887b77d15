#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontolab {

/// Argument outside the mathematical domain of an operation (points on or
/// outside the unit circle, a >= b in a stretching bound, parent of the root).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent input (overlapping arcs, bad file contents).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A grid is too coarse to represent one of the plates.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system could not be solved reliably.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// Cholesky met a non-positive pivot.
class DefinitenessError : public NumericalFailure {
 public:
  DefinitenessError(const std::string& what, std::size_t pivot_index,
                    double condition_estimate)
      : NumericalFailure(what, condition_estimate), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

/// Adaptive integration hit its depth limit; carries the best estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace ontolab
