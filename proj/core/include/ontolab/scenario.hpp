#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/report.hpp"
#include "ontolab/sequence.hpp"

namespace ontolab {

/// A finite stand-in for the non-interpolating union of a separated lattice
/// and combs: comb anchors at levels m^2 and angles anchor_turns, plus a
/// disjoint-box lattice kept away from the anchors' S^eta boxes.
struct ScenarioParams {
  std::vector<unsigned> comb_m{10, 20, 40};
  std::vector<long double> anchor_turns{0.0L, 1.0L / 3, 2.0L / 3};
  unsigned lattice_count = 40;
  double lattice_depth_min = 1e-3;
  double lattice_depth_max = 1e-1;
  std::uint64_t seed = 7;
  CheckParams check;  ///< eta places the lattice; k budgets the mass ratio
  bool lattice_cc = true;  ///< also run the capacitary check on the lattice
  int modes_per_arc = 16;
};

struct CombOutcome {
  unsigned m = 0;
  TreeNode anchor;
  double anchor_kernel_norm = 0.0;  ///< d(omega)
  double mass = 0.0;                ///< sum over teeth of 1 / d(z)
  double mass_ratio = 0.0;          ///< mass * sqrt(d(omega)), bounded by k
  double tree_capacity = 0.0;       ///< cap_tau(omega; comb(omega))
  double tree_ratio = 0.0;          ///< tree_capacity * level(omega)
  double tree_threshold = 0.0;      ///< 0.1 sqrt(level(omega))
  bool mass_pass = false;
  bool tree_pass = false;
};

struct ScenarioReport {
  Sequence sequence;  ///< lattice first, then each comb (anchor, teeth)
  std::size_t lattice_size = 0;
  std::vector<CombOutcome> combs;
  double ws_min = 0.0;             ///< min d_D over distinct pairs
  double ws_hyperbolic_min = 0.0;
  bool ws_pass = false;            ///< ws_min > 0
  std::optional<CheckReport> lattice_cc;
  bool pass = false;
  ScenarioParams params;
  std::vector<std::string> warnings;
};

/// Builds the union and reports (a) its weak-separation minimum, (b) each
/// comb's mass against 1 / sqrt(d(omega)) and (c) each comb's tree capacity
/// against 1 / (10 sqrt(level)). Throws InputError for infeasible placement.
ScenarioReport counterexample_scenario(const ScenarioParams& params);

}  // namespace ontolab
