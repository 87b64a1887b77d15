#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ontolab {

/// Parameters shared by the checkers.
struct CheckParams {
  double gamma = 0.75;  ///< vicinity exponent
  double eta = 0.9;     ///< box expansion for normalization / separation
  double beta = 0.5;    ///< normalization exponent
  double delta = 0.1;   ///< weak separation threshold (metric form)
  double k = 64.0;      ///< budget: pass iff sup_ratio <= k
};

struct CheckRecord {
  std::size_t index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::string error;  ///< set when this record's computation failed
};

/// Outcome of a checker: per-point records and the supremum of their ratios.
struct CheckReport {
  std::string condition_name;
  std::vector<CheckRecord> records;
  double sup_ratio = 0.0;
  std::optional<std::size_t> witness_index;  ///< record index attaining sup
  bool pass = true;
  CheckParams params;
  std::map<std::string, double> extras;  ///< condition-specific summaries
  std::vector<std::string> warnings;

  /// Sets sup_ratio / witness from records and pass = sup_ratio <= params.k
  /// (and no record failed).
  void finalize();
};

}  // namespace ontolab
