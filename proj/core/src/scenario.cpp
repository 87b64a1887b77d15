#include "ontolab/scenario.hpp"

#include <cmath>

#include "ontolab/checkers.hpp"
#include "ontolab/errors.hpp"
#include "ontolab/generators.hpp"

namespace ontolab {

ScenarioReport counterexample_scenario(const ScenarioParams& params) {
  if (params.comb_m.empty()) throw InputError("scenario: no combs requested");
  if (params.anchor_turns.size() != params.comb_m.size()) {
    throw InputError("scenario: need one anchor angle per comb");
  }
  ScenarioReport report;
  report.params = params;

  std::vector<Sequence> combs;
  DisjointBoxesParams lattice;
  lattice.count = params.lattice_count;
  lattice.depth_min = params.lattice_depth_min;
  lattice.depth_max = params.lattice_depth_max;
  lattice.eta = params.check.eta;
  lattice.seed = params.seed;
  for (std::size_t c = 0; c < params.comb_m.size(); ++c) {
    combs.push_back(generate_comb(params.comb_m[c], params.anchor_turns[c]));
    const CarlesonBox box = expanded_box(combs.back()[0], params.check.eta);
    for (const auto& other : lattice.forbidden) {
      if (boxes_intersect(box, other)) {
        throw InputError("scenario: S^eta boxes of comb anchors " + std::to_string(c) +
                         " and an earlier anchor intersect");
      }
    }
    lattice.forbidden.push_back(box);
  }

  Sequence all = lattice.count > 0 ? generate_disjoint_boxes(lattice) : Sequence();
  report.lattice_size = all.size();
  if (params.lattice_cc && !all.empty()) {
    report.lattice_cc = check_capacitary_condition(all, params.check, params.modes_per_arc);
  }
  for (const auto& comb : combs) all = concatenate(all, comb);
  all.set_label("counterexample");

  const CheckReport ws = check_weak_separation(all, params.check);
  report.ws_min = ws.extras.at("metric_min");
  report.ws_hyperbolic_min = ws.extras.at("hyperbolic_min");
  report.ws_pass = report.ws_min > 0.0;
  for (const auto& w : ws.warnings) report.warnings.push_back(w);

  bool pass = report.ws_pass;
  for (std::size_t c = 0; c < combs.size(); ++c) {
    CombOutcome out;
    out.m = params.comb_m[c];
    const CombSpec spec{node_near(out.m * out.m, params.anchor_turns[c])};
    out.anchor = spec.anchor;
    out.anchor_kernel_norm = combs[c].kernel_norm(0);
    for (std::size_t i = 1; i < combs[c].size(); ++i) out.mass += 1.0 / combs[c].kernel_norm(i);
    out.mass_ratio = out.mass * std::sqrt(out.anchor_kernel_norm);
    out.tree_capacity = tree_capacity_recursive(comb_condenser(spec));
    const double level = spec.root_level();
    out.tree_ratio = out.tree_capacity * level;
    out.tree_threshold = 0.1 * std::sqrt(level);
    out.mass_pass = out.mass_ratio <= params.check.k;
    out.tree_pass = out.tree_ratio >= out.tree_threshold;
    pass = pass && out.mass_pass && out.tree_pass;
    report.combs.push_back(out);
  }
  report.pass = pass;
  report.sequence = std::move(all);
  return report;
}

}  // namespace ontolab
