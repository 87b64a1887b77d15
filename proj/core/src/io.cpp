#include "ontolab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "ontolab/errors.hpp"

namespace ontolab::io {

namespace {

std::string long_double_string(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

double get_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
  }
  throw InputError(where + "." + key + ": expected a number");
}

long double get_long_double(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    char* end = nullptr;
    const long double x = std::strtold(s.c_str(), &end);
    if (end != s.c_str() && *end == '\0') return x;
  }
  throw InputError(where + "." + key + ": expected a number or numeric string");
}

Turns turns_field(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Turns::parse(v.get<std::string>());
    if (v.is_number()) return Turns::from_fraction(v.get<double>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a fraction of the circle or \"N/2^E\"");
}

const json& require_array(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InputError(where + ": field '" + key + "' must be an array");
  }
  return j.at(key);
}

template <class F>
auto rethrow_as_input(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw InputError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

void RunConfig::validate() const {
  const auto& c = check;
  if (!(c.gamma > 0.0 && c.gamma < 1.0)) throw InputError("config.gamma must lie in (0, 1)");
  if (!(c.eta > 0.0 && c.eta < 1.0)) throw InputError("config.eta must lie in (0, 1)");
  if (!(c.beta > 0.0 && c.beta < c.eta)) throw InputError("config.beta must lie in (0, eta)");
  if (!(c.delta >= 0.0 && c.delta < 1.0)) throw InputError("config.delta must lie in [0, 1)");
  if (!(c.k > 0.0 && std::isfinite(c.k))) throw InputError("config.K must be positive");
  if (quad_nodes < 8 || quad_nodes > 256) throw InputError("config.quad must lie in [8, 256]");
  if (grid.radial < 8 || grid.radial > 2048) throw InputError("config.grid_r must lie in [8, 2048]");
  if (grid.angular < 8 || grid.angular > 4096) throw InputError("config.grid_t must lie in [8, 4096]");
  if (format != "json" && format != "csv") throw InputError("config.format must be json or csv");
}

json to_json(const RunConfig& config) {
  return {{"gamma", config.check.gamma}, {"eta", config.check.eta},
          {"beta", config.check.beta},   {"delta", config.check.delta},
          {"K", config.check.k},         {"quad", config.quad_nodes},
          {"grid_r", config.grid.radial}, {"grid_t", config.grid.angular},
          {"format", config.format},     {"seed", config.seed}};
}

RunConfig run_config_from_json(const json& j, const RunConfig& defaults) {
  return rethrow_as_input("config", [&] {
    RunConfig c = defaults;
    c.check.gamma = j.value("gamma", c.check.gamma);
    c.check.eta = j.value("eta", c.check.eta);
    c.check.beta = j.value("beta", c.check.beta);
    c.check.delta = j.value("delta", c.check.delta);
    c.check.k = j.value("K", c.check.k);
    c.quad_nodes = j.value("quad", c.quad_nodes);
    c.grid.radial = j.value("grid_r", c.grid.radial);
    c.grid.angular = j.value("grid_t", c.grid.angular);
    c.format = j.value("format", c.format);
    c.seed = j.value("seed", c.seed);
    c.validate();
    return c;
  });
}

json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json to_json(const DiscPoint& z) {
  return {{"r", z.radius()},
          {"theta", z.theta()},
          {"turns", z.angle().to_string()},
          {"depth", long_double_string(z.depth())}};
}

DiscPoint point_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  return rethrow_as_input(where, [&]() -> DiscPoint {
    if (j.contains("turns")) {
      const Turns t = turns_field(j.at("turns"), where + ".turns");
      long double depth;
      if (j.contains("depth")) {
        depth = get_long_double(j, "depth", where);
      } else if (j.contains("log2_depth")) {
        depth = std::exp2(get_long_double(j, "log2_depth", where));
      } else {
        throw InputError(where + ": 'turns' needs 'depth' or 'log2_depth'");
      }
      if (!(depth > 0.0L && depth <= 1.0L)) {
        throw InputError(where + ": depth must lie in (0, 1]");
      }
      return DiscPoint::from_depth(depth, t);
    }
    if (j.contains("n") || j.contains("k")) return embed(tree_node_from_json(j, where));
    if (j.contains("r") || j.contains("theta")) {
      return DiscPoint::from_polar(get_number(j, "r", where), get_number(j, "theta", where));
    }
    if (j.contains("re") || j.contains("im")) {
      return DiscPoint::from_cartesian(get_number(j, "re", where), get_number(j, "im", where));
    }
    throw InputError(where + ": expected {r, theta}, {re, im}, {n, k} or {turns, depth}");
  });
}

json to_json(const TreeNode& node) {
  return {{"n", node.level}, {"k", node.index.str()}};
}

TreeNode tree_node_from_json(const json& j, const std::string& where) {
  return rethrow_as_input(where, [&] {
    TreeNode node;
    if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 0) {
      throw InputError(where + ".n: expected a nonnegative integer");
    }
    node.level = j.at("n").get<unsigned>();
    if (!j.contains("k")) throw InputError(where + ": missing field 'k'");
    const json& k = j.at("k");
    if (k.is_number_integer()) {
      node.index = BigInt(k.get<long long>());
    } else if (k.is_string()) {
      try {
        node.index = BigInt(k.get<std::string>());
      } catch (const std::exception&) {
        throw InputError(where + ".k: not an integer");
      }
    } else {
      throw InputError(where + ".k: expected an integer");
    }
    validate(node);
    return node;
  });
}

json to_json(const Arc& arc) {
  return {{"turns", arc.center().to_string()},
          {"center", arc.center_angle()},
          {"length", static_cast<double>(arc.length())}};
}

Arc arc_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  return rethrow_as_input(where, [&] {
    Turns center;
    if (j.contains("turns")) {
      center = turns_field(j.at("turns"), where + ".turns");
    } else {
      center = Turns::from_radians(get_number(j, "center", where));
    }
    const long double length = get_long_double(j, "length", where);
    if (!(length > 0.0L && length <= 1.0L)) {
      throw InputError(where + ".length must lie in (0, 1]");
    }
    return Arc(center, length);
  });
}

json to_json(const CarlesonBox& box) {
  return {{"arc", to_json(box.base)}, {"depth", long_double_string(box.depth)}};
}

CarlesonBox box_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  if (j.contains("point")) return carleson_box(point_from_json(j.at("point"), where + ".point"));
  if (!j.contains("arc")) throw InputError(where + ": expected {arc, depth} or {point}");
  const Arc arc = arc_from_json(j.at("arc"), where + ".arc");
  const long double depth = get_long_double(j, "depth", where);
  if (!(depth > 0.0L && depth <= 1.0L)) throw InputError(where + ".depth must lie in (0, 1]");
  return {arc, depth};
}

json to_json(const HyperbolicDisc& disc) {
  return {{"center", to_json(disc.center)}, {"radius", disc.radius}};
}

HyperbolicDisc disc_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("center")) {
    throw InputError(where + ": expected {center, radius}");
  }
  HyperbolicDisc disc{point_from_json(j.at("center"), where + ".center"),
                      j.contains("radius") ? get_number(j, "radius", where) : 1.0};
  if (!(disc.radius > 0.0 && std::isfinite(disc.radius))) {
    throw InputError(where + ".radius must be positive");
  }
  return disc;
}

json to_json(const Sequence& seq) {
  json points = json::array();
  for (const auto& z : seq.points()) points.push_back(to_json(z));
  json j = {{"label", seq.label()}, {"points", points}};
  if (seq.tail_bound()) j["tail_bound"] = number(*seq.tail_bound());
  return j;
}

Sequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw InputError("sequence: expected an object");
  const json& pts = require_array(j, "points", "sequence");
  std::vector<DiscPoint> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    points.push_back(point_from_json(pts[i], "points[" + std::to_string(i) + "]"));
  }
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw InputError("sequence.label: expected a string");
    label = j.at("label").get<std::string>();
  }
  Sequence seq(std::move(points), label);
  if (j.contains("tail_bound")) seq.set_tail_bound(get_number(j, "tail_bound", "sequence"));
  return seq;
}

json to_json(const CondenserSpec& spec) {
  json outer;
  std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        json list = json::array();
        for (const auto& p : plates) list.push_back(to_json(p));
        if constexpr (std::is_same_v<T, Arc>) {
          outer["arcs"] = list;
        } else if constexpr (std::is_same_v<T, CarlesonBox>) {
          outer["boxes"] = list;
        } else {
          outer["discs"] = list;
        }
      },
      spec.plate_outer);
  return {{"plate_inner", to_json(spec.plate_inner)}, {"plate_outer", outer}};
}

CondenserSpec condenser_from_json(const json& j) {
  if (!j.is_object() || !j.contains("plate_inner") || !j.contains("plate_outer")) {
    throw InputError("condenser: expected {plate_inner, plate_outer}");
  }
  CondenserSpec spec{disc_from_json(j.at("plate_inner"), "plate_inner"), {}};
  const json& outer = j.at("plate_outer");
  if (!outer.is_object()) throw InputError("plate_outer: expected an object");
  auto each = [&](const char* key, auto parse) {
    const json& list = require_array(outer, key, "plate_outer");
    using T = decltype(parse(list[0], std::string()));
    std::vector<T> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.push_back(parse(list[i], std::string("plate_outer.") + key + "[" +
                                       std::to_string(i) + "]"));
    }
    return out;
  };
  if (outer.contains("arcs")) {
    spec.plate_outer = each("arcs", arc_from_json);
  } else if (outer.contains("boxes")) {
    spec.plate_outer = each("boxes", box_from_json);
  } else if (outer.contains("discs")) {
    spec.plate_outer = each("discs", disc_from_json);
  } else {
    throw InputError("plate_outer: expected one of arcs, boxes, discs");
  }
  return spec;
}

std::vector<Arc> arcs_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) list = &require_array(j, "arcs", "spec");
  if (!list->is_array()) throw InputError("spec: expected an array of arcs");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < list->size(); ++i) {
    arcs.push_back(arc_from_json((*list)[i], "arcs[" + std::to_string(i) + "]"));
  }
  return arcs;
}

json to_json(const CheckReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    json rec = {{"index", r.index},
                {"lhs", number(r.lhs)},
                {"rhs", number(r.rhs)},
                {"ratio", number(r.ratio)}};
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(rec);
  }
  json extras = json::object();
  for (const auto& [k, v] : report.extras) extras[k] = number(v);
  return {{"condition", report.condition_name},
          {"pass", report.pass},
          {"sup_ratio", number(report.sup_ratio)},
          {"witness_index", report.witness_index ? json(*report.witness_index) : json()},
          {"params",
           {{"gamma", report.params.gamma},
            {"eta", report.params.eta},
            {"beta", report.params.beta},
            {"delta", report.params.delta},
            {"K", report.params.k}}},
          {"extras", extras},
          {"warnings", report.warnings},
          {"records", records}};
}

json to_json(const ScenarioReport& report) {
  json combs = json::array();
  for (const auto& c : report.combs) {
    combs.push_back({{"m", c.m},
                     {"anchor", to_json(c.anchor)},
                     {"anchor_kernel_norm", number(c.anchor_kernel_norm)},
                     {"mass", number(c.mass)},
                     {"mass_ratio", number(c.mass_ratio)},
                     {"mass_pass", c.mass_pass},
                     {"tree_capacity", number(c.tree_capacity)},
                     {"tree_ratio", number(c.tree_ratio)},
                     {"tree_threshold", number(c.tree_threshold)},
                     {"tree_pass", c.tree_pass}});
  }
  json j = {{"pass", report.pass},
            {"points", report.sequence.size()},
            {"lattice_size", report.lattice_size},
            {"weak_separation",
             {{"metric_min", number(report.ws_min)},
              {"hyperbolic_min", number(report.ws_hyperbolic_min)},
              {"pass", report.ws_pass}}},
            {"combs", combs},
            {"warnings", report.warnings}};
  if (report.lattice_cc) j["lattice_cc"] = to_json(*report.lattice_cc);
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void write_records_csv(const CheckReport& report, std::ostream& out) {
  out << "index,lhs,rhs,ratio,error\n";
  out.precision(17);
  for (const auto& r : report.records) {
    out << r.index << ',' << r.lhs << ',' << r.rhs << ',' << r.ratio << ',' << r.error << '\n';
  }
}

}  // namespace ontolab::io
