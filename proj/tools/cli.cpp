#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/capacity.hpp"
#include "ontolab/checkers.hpp"
#include "ontolab/equilibrium.hpp"
#include "ontolab/errors.hpp"
#include "ontolab/generators.hpp"
#include "ontolab/grid_condenser.hpp"
#include "ontolab/io.hpp"
#include "ontolab/scenario.hpp"

namespace ontolab::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = ONTOLAB_VERSION;

/// Options shared by every leaf command.
struct Common {
  io::RunConfig config;
  std::string config_file;
  std::string out_path;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_file,
                  "JSON run config (e.g. the 'config' of an earlier report); "
                  "explicit flags override it");
  app->add_option("--gamma", c.config.check.gamma, "vicinity exponent in (0, 1)");
  app->add_option("--eta", c.config.check.eta, "box expansion exponent in (0, 1)");
  app->add_option("--beta", c.config.check.beta, "normalization exponent in (0, eta)");
  app->add_option("--delta", c.config.check.delta, "weak separation threshold");
  app->add_option("--K", c.config.check.k, "budget for condition ratios");
  app->add_option("--quad", c.config.quad_nodes, "Chebyshev modes per arc [8, 256]");
  app->add_option("--grid-r", c.config.grid.radial, "radial grid cells");
  app->add_option("--grid-t", c.config.grid.angular, "angular grid cells");
  app->add_option("--out", c.out_path, "output file (default: stdout)");
  app->add_option("--seed", c.config.seed, "random seed");
  app->add_option("--format", c.config.format, "json or csv");
}

/// Merges --config under the explicitly given flags and validates.
void resolve(CLI::App* app, Common& c) {
  if (c.config_file.empty()) {
    c.config.validate();
    return;
  }
  const json file = io::read_json_file(c.config_file);
  const json& cfg = file.contains("config") ? file.at("config") : file;
  io::RunConfig merged = io::run_config_from_json(cfg);
  auto given = [&](const char* flag) { return app->count(flag) > 0; };
  if (given("--gamma")) merged.check.gamma = c.config.check.gamma;
  if (given("--eta")) merged.check.eta = c.config.check.eta;
  if (given("--beta")) merged.check.beta = c.config.check.beta;
  if (given("--delta")) merged.check.delta = c.config.check.delta;
  if (given("--K")) merged.check.k = c.config.check.k;
  if (given("--quad")) merged.quad_nodes = c.config.quad_nodes;
  if (given("--grid-r")) merged.grid.radial = c.config.grid.radial;
  if (given("--grid-t")) merged.grid.angular = c.config.grid.angular;
  if (given("--seed")) merged.seed = c.config.seed;
  if (given("--format")) merged.format = c.config.format;
  merged.validate();
  c.config = merged;
}

/// Writes text to --out or the default stream.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path);
  if (!file) throw InputError(c.out_path + ": cannot open for writing");
  file << text;
}

json envelope(const Common& c, const std::string& command, const json& body) {
  return {{"tool", "ontolab"},
          {"version", kVersion},
          {"command", command},
          {"config", io::to_json(c.config)},
          {"result", body}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool has_record_errors(const CheckReport& r) {
  for (const auto& rec : r.records) {
    if (!rec.error.empty()) return true;
  }
  return false;
}

/// A leaf command: its Common options and the action producing an exit code.
struct Leaf {
  Common common;
  std::function<int()> action;
};

// --------------------------------------------------------------------------
// check

void add_check(CLI::App& app, std::vector<std::unique_ptr<Leaf>>& leaves,
               std::ostream& out, int& result) {
  auto* check = app.add_subcommand("check", "run a condition checker on a sequence file");
  check->require_subcommand(1);
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {{"ws", "weak separation"},
                        {"cc", "capacitary condition"},
                        {"cm", "Carleson-measure sampler over dyadic arcs"},
                        {"mass", "finite associated measure"},
                        {"theorem-d", "restricted-vicinity sufficient condition"}};
  for (const auto& s : specs) {
    auto leaf = std::make_unique<Leaf>();
    auto* sub = check->add_subcommand(s.name, s.help);
    auto input = std::make_shared<std::string>();
    auto levels = std::make_shared<unsigned>(6);
    sub->add_option("sequence", *input, "sequence JSON file")->required();
    if (std::string(s.name) == "cm") {
      sub->add_option("--levels", *levels, "dyadic levels to sample (1..16)");
    }
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    const std::string name = s.name;
    leaf->action = [l, sub, input, levels, name, &out]() {
      resolve(sub, l->common);
      const auto& cfg = l->common.config;
      const Sequence seq = io::sequence_from_json(io::read_json_file(*input));
      CheckReport rep;
      if (name == "ws") {
        rep = check_weak_separation(seq, cfg.check);
      } else if (name == "cc") {
        rep = check_capacitary_condition(seq, cfg.check, cfg.quad_nodes);
      } else if (name == "cm") {
        if (*levels < 1 || *levels > 16) throw InputError("--levels must lie in [1, 16]");
        const auto families = dyadic_arc_families(*levels);
        rep = check_carleson(seq, families, cfg.check, cfg.quad_nodes);
      } else if (name == "mass") {
        rep = finite_measure_report(seq, cfg.check);
      } else {
        rep = check_theorem_d(seq, cfg.check);
      }
      if (cfg.format == "csv") {
        std::ostringstream csv;
        io::write_records_csv(rep, csv);
        emit(l->common, out, csv.str());
      } else {
        json body = io::to_json(rep);
        body["input"] = *input;
        body["points"] = seq.size();
        emit(l->common, out, dump(envelope(l->common, "check " + name, body)));
      }
      if (has_record_errors(rep)) return int(kNumericalFailure);
      return rep.pass ? int(kPass) : int(kConditionFail);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }
}

// --------------------------------------------------------------------------
// tree

TreeNode parse_node(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("tree node '" + text + "': expected n,k");
  TreeNode node;
  try {
    node.level = static_cast<unsigned>(std::stoul(text.substr(0, comma)));
    node.index = BigInt(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw InputError("tree node '" + text + "': expected integers n,k");
  }
  validate(node);
  return node;
}

void add_tree(CLI::App& app, std::vector<std::unique_ptr<Leaf>>& leaves, std::ostream& out,
              int& result) {
  auto* tree = app.add_subcommand("tree", "Bergman-tree capacities and the comb counterexample");
  tree->require_subcommand(1);

  {  // cap
    auto leaf = std::make_unique<Leaf>();
    auto* sub = tree->add_subcommand("cap", "capacity of a tree condenser");
    struct Args {
      std::string source = "0,1";
      std::vector<std::string> targets;
      unsigned single_path_depth = 0;
      std::string spec_file;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--source", a->source, "source node n,k");
    sub->add_option("--target", a->targets, "target node n,k (repeatable)");
    sub->add_option("--single-path-depth", a->single_path_depth,
                    "one target this many levels below the source");
    sub->add_option("--spec", a->spec_file, "JSON {source: {n,k}, targets: [{n,k}...]}");
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, a, &out]() {
      resolve(sub, l->common);
      TreeCondenser c;
      if (!a->spec_file.empty()) {
        const json j = io::read_json_file(a->spec_file);
        if (!j.contains("source") || !j.contains("targets") || !j.at("targets").is_array()) {
          throw InputError(a->spec_file + ": expected {source, targets: [...]}");
        }
        c.source = io::tree_node_from_json(j.at("source"), "source");
        for (std::size_t i = 0; i < j.at("targets").size(); ++i) {
          c.targets.push_back(io::tree_node_from_json(j.at("targets")[i],
                                                      "targets[" + std::to_string(i) + "]"));
        }
      } else {
        c.source = parse_node(a->source);
        for (const auto& t : a->targets) c.targets.push_back(parse_node(t));
        if (a->single_path_depth > 0) {
          c.targets.push_back(TreeNode{c.source.level + a->single_path_depth,
                                       c.source.index << a->single_path_depth});
        }
      }
      if (c.targets.empty()) throw InputError("tree cap: no targets given");
      const double recursive = tree_capacity_recursive(c);
      const std::size_t nodes = path_union_size(c);
      json body = {{"source", io::to_json(c.source)},
                   {"targets", c.targets.size()},
                   {"path_union_nodes", nodes},
                   {"capacity", recursive}};
      if (nodes <= 200000) body["exact_solver"] = tree_capacity_exact(c);
      if (nodes <= 5000) {
        const Rational r = tree_capacity_rational(c);
        std::ostringstream s;
        s << r;
        body["rational"] = s.str();
      }
      emit(l->common, out, dump(envelope(l->common, "tree cap", body)));
      return int(kPass);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }

  {  // comb
    auto leaf = std::make_unique<Leaf>();
    auto* sub = tree->add_subcommand("comb", "comb capacity sweep over m = sqrt(N)");
    struct Args {
      std::string m = "2..60";
      unsigned exact_max = 400;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--m", a->m, "range a..b or single value of m = sqrt(N)");
    sub->add_option("--exact-max", a->exact_max,
                    "run the exact Laplacian solver for N up to this value");
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, a, &out]() {
      resolve(sub, l->common);
      unsigned lo = 0, hi = 0;
      try {
        const auto dots = a->m.find("..");
        lo = static_cast<unsigned>(std::stoul(a->m.substr(0, dots)));
        hi = dots == std::string::npos ? lo
                                       : static_cast<unsigned>(std::stoul(a->m.substr(dots + 2)));
      } catch (const std::exception&) {
        throw InputError("--m: expected a or a..b");
      }
      if (lo < 2 || hi < lo || hi > 200) throw InputError("--m: need 2 <= a <= b <= 200");
      const double limit = std::tanh(1.0);
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "N,c0,c0_sqrtN,closed_form,exact_solver,limit_gap\n";
      json rows = json::array();
      bool bound_ok = true;
      for (unsigned m = lo; m <= hi; ++m) {
        const unsigned n = m * m;
        const double c0 = comb_capacity_transfer(n);
        const double closed = comb_capacity_closed_form(n);
        double exact = NAN;
        if (n <= a->exact_max) exact = tree_capacity_exact(comb_condenser(CombSpec{node_near(n, 0.0L)}));
        if (n >= 16 && c0 * m < 0.1) bound_ok = false;
        csv << n << ',' << c0 << ',' << c0 * m << ',' << closed << ',';
        if (!std::isnan(exact)) csv << exact;
        csv << ',' << limit - c0 * m << '\n';
        rows.push_back({{"N", n},
                        {"c0", c0},
                        {"c0_sqrtN", c0 * m},
                        {"closed_form", closed},
                        {"exact_solver", io::number(exact)},
                        {"limit_gap", limit - c0 * m}});
      }
      if (l->common.config.format == "csv") {
        emit(l->common, out, csv.str());
      } else {
        emit(l->common, out,
             dump(envelope(l->common, "tree comb", {{"limit", limit}, {"rows", rows}})));
      }
      return bound_ok ? int(kPass) : int(kConditionFail);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }

  {  // counterexample
    auto leaf = std::make_unique<Leaf>();
    auto* sub = tree->add_subcommand("counterexample", "lattice plus combs scenario");
    auto p = std::make_shared<ScenarioParams>();
    auto ms = std::make_shared<std::vector<unsigned>>(p->comb_m);
    sub->add_option("--m", *ms, "comb sizes m (anchor level m^2); angles spread evenly");
    sub->add_option("--lattice", p->lattice_count, "number of lattice points");
    auto skip_cc = std::make_shared<bool>(false);
    sub->add_flag("--no-lattice-cc", *skip_cc, "skip the lattice capacitary check");
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, p, ms, skip_cc, &out]() {
      resolve(sub, l->common);
      ScenarioParams params = *p;
      params.comb_m = *ms;
      params.lattice_cc = !*skip_cc;
      params.anchor_turns.clear();
      for (std::size_t i = 0; i < ms->size(); ++i) {
        params.anchor_turns.push_back(static_cast<long double>(i) / ms->size());
      }
      params.seed = l->common.config.seed;
      params.check = l->common.config.check;
      params.modes_per_arc = l->common.config.quad_nodes;
      const ScenarioReport rep = counterexample_scenario(params);
      emit(l->common, out, dump(envelope(l->common, "tree counterexample", io::to_json(rep))));
      return rep.pass ? int(kPass) : int(kConditionFail);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }

  {  // distcheck
    auto leaf = std::make_unique<Leaf>();
    auto* sub = tree->add_subcommand("distcheck", "tree level vs hyperbolic distance bounds");
    auto n_max = std::make_shared<unsigned>(60);
    sub->add_option("--n-max", *n_max, "largest level (<= 60)");
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, n_max, &out]() {
      resolve(sub, l->common);
      const CheckReport rep = tree_disc_distance_check(*n_max);
      emit(l->common, out, dump(envelope(l->common, "tree distcheck", io::to_json(rep))));
      return rep.pass ? int(kPass) : int(kConditionFail);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }
}

// --------------------------------------------------------------------------
// capacity

void add_capacity(CLI::App& app, std::vector<std::unique_ptr<Leaf>>& leaves,
                  std::ostream& out, int& result) {
  auto* cap = app.add_subcommand("capacity", "capacities of arc sets and condensers");
  cap->require_subcommand(1);

  {  // arcs
    auto leaf = std::make_unique<Leaf>();
    auto* sub = cap->add_subcommand("arcs", "C(E) for a list of boundary arcs");
    auto input = std::make_shared<std::string>();
    sub->add_option("spec", *input, "JSON [arcs] or {arcs: [...]}")->required();
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, input, &out]() {
      resolve(sub, l->common);
      const int modes = l->common.config.quad_nodes;
      const auto arcs = merge_arcs(io::arcs_from_json(io::read_json_file(*input)));
      json body = {{"arcs", arcs.size()}, {"modes_per_arc", modes}};
      if (arcs.empty() || arcs[0].is_full()) {
        body["capacity"] = log_capacity(arcs, modes);
      } else {
        const auto mu = equilibrium_measure(arcs, modes);
        body["capacity"] = log_capacity(arcs, modes);
        body["robin_constant"] = mu.energy;
        body["condition_estimate"] = mu.condition_estimate;
        body["quadrature_nodes"] = mu.nodes.size();
      }
      emit(l->common, out, dump(envelope(l->common, "capacity arcs", body)));
      return int(kPass);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }

  {  // condenser
    auto leaf = std::make_unique<Leaf>();
    auto* sub = cap->add_subcommand("condenser", "condenser capacity via transfer to the origin");
    auto input = std::make_shared<std::string>();
    sub->add_option("spec", *input, "condenser spec JSON")->required();
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, input, &out]() {
      resolve(sub, l->common);
      const CondenserSpec spec = io::condenser_from_json(io::read_json_file(*input));
      if (spec.plate_inner.radius != 1.0) {
        throw InputError("capacity condenser: plate_inner must be a hyperbolic disc of radius 1; "
                         "use 'capacity grid' for other radii");
      }
      json body;
      if (plates_intersect(spec)) {
        body = {{"capacity", 0.0},
                {"plates_intersect", true},
                {"note", "intersecting plates have capacity 0 by convention"}};
      } else {
        const auto c = condenser_capacity(spec.plate_inner.center, spec.plate_outer,
                                          l->common.config.quad_nodes);
        json arcs = json::array();
        for (const auto& a : c.image_arcs) arcs.push_back(io::to_json(a));
        body = {{"capacity", c.value},
                {"plates_intersect", c.plates_intersect},
                {"comparability_warning", c.comparability_warning},
                {"image_arcs", arcs},
                {"modes_per_arc", l->common.config.quad_nodes}};
        if (!c.note.empty()) body["note"] = c.note;
      }
      emit(l->common, out, dump(envelope(l->common, "capacity condenser", body)));
      return int(kPass);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }

  {  // grid
    auto leaf = std::make_unique<Leaf>();
    auto* sub = cap->add_subcommand("grid", "condenser capacity by the polar grid solver");
    auto input = std::make_shared<std::string>();
    auto potential_csv = std::make_shared<std::string>();
    auto no_refine = std::make_shared<bool>(false);
    sub->add_option("spec", *input, "condenser spec JSON")->required();
    sub->add_option("--potential-csv", *potential_csv, "write r,theta,value of the potential");
    sub->add_flag("--no-refine", *no_refine, "skip the refined comparison solve");
    add_common(sub, leaf->common);
    Leaf* l = leaf.get();
    leaf->action = [l, sub, input, potential_csv, no_refine, &out]() {
      resolve(sub, l->common);
      const CondenserSpec spec = io::condenser_from_json(io::read_json_file(*input));
      const GridResolution res = l->common.config.grid;
      const GridPotential u = grid_condenser_capacity(spec, res);
      json body = {{"capacity", u.energy},
                   {"plates_intersect", u.plates_intersect},
                   {"grid", {res.radial, res.angular}}};
      if (!*no_refine && !u.plates_intersect) {
        const GridPotential fine =
            grid_condenser_capacity(spec, {2 * res.radial, 2 * res.angular});
        body["refined_capacity"] = fine.energy;
        body["refinement_delta"] = fine.energy - u.energy;
      }
      if (u.plates_intersect) body["note"] = "intersecting plates have capacity 0 by convention";
      if (!potential_csv->empty()) {
        std::ofstream f(*potential_csv);
        if (!f) throw InputError(*potential_csv + ": cannot open for writing");
        write_potential_csv(u, f);
      }
      emit(l->common, out, dump(envelope(l->common, "capacity grid", body)));
      return int(kPass);
    };
    sub->callback([l, &result] { result = l->action(); });
    leaves.push_back(std::move(leaf));
  }
}

// --------------------------------------------------------------------------
// generate

void add_generate(CLI::App& app, std::vector<std::unique_ptr<Leaf>>& leaves,
                  std::ostream& out, int& result) {
  auto leaf = std::make_unique<Leaf>();
  auto* sub = app.add_subcommand(
      "generate", "write a sequence file (radial, radial_power, disjoint_boxes, comb, union)");
  auto kind = std::make_shared<std::string>();
  auto params = std::make_shared<std::string>("{}");
  sub->add_option("kind", *kind, "generator kind")->required();
  sub->add_option("--params", *params, "generator parameters as a JSON object");
  add_common(sub, leaf->common);
  Leaf* l = leaf.get();
  leaf->action = [l, sub, kind, params, &out]() {
    resolve(sub, l->common);
    json p;
    try {
      p = json::parse(*params);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("--params: ") + e.what());
    }
    const Sequence seq = generate(*kind, p, l->common.config.seed);
    emit(l->common, out, dump(io::to_json(seq)));
    return int(kPass);
  };
  sub->callback([l, &result] { result = l->action(); });
  leaves.push_back(std::move(leaf));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity, separation and tree-capacity laboratory for the Dirichlet space",
               "ontolab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int result = kPass;
  std::vector<std::unique_ptr<Leaf>> leaves;
  add_check(app, leaves, out, result);
  add_tree(app, leaves, out, result);
  add_capacity(app, leaves, out, result);
  add_generate(app, leaves, out, result);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, msg;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? int(kPass) : int(kInputError);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << " (condition estimate "
        << e.condition_estimate() << ")\n";
    return kNumericalFailure;
  } catch (const ResolutionError& e) {
    err << "resolution error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
    return kNumericalFailure;
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ontolab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ontolab::cli
