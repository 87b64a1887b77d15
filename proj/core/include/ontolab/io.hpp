#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/capacity.hpp"
#include "ontolab/grid_condenser.hpp"
#include "ontolab/report.hpp"
#include "ontolab/scenario.hpp"
#include "ontolab/sequence.hpp"

namespace ontolab::io {

using nlohmann::json;

/// Everything a run depends on; embedded in every report.
struct RunConfig {
  CheckParams check;
  int quad_nodes = 16;  ///< Chebyshev modes per arc for C(E)
  GridResolution grid;
  std::string format = "json";  ///< json | csv
  std::uint64_t seed = 1;

  /// Throws InputError naming the first out-of-range field.
  void validate() const;
};

json to_json(const RunConfig& config);
/// Fields absent from j keep the values of `defaults`.
RunConfig run_config_from_json(const json& j, const RunConfig& defaults = {});

/// Finite numbers as numbers, others as "inf", "-inf" or "nan".
json number(double x);

/// Points serialize as {"r", "theta", "turns", "depth"}; turns is the exact
/// dyadic angle and depth = 1 - |z| in full precision (a decimal string).
/// Accepted inputs, by precedence: {"turns", "depth" | "log2_depth"},
/// {"n", "k"} (tree node; k may be a decimal string), {"r", "theta"},
/// {"re", "im"}. `where` prefixes error messages.
json to_json(const DiscPoint& z);
DiscPoint point_from_json(const json& j, const std::string& where = "point");

json to_json(const TreeNode& node);
TreeNode tree_node_from_json(const json& j, const std::string& where = "node");

/// {"turns", "length"}; inputs may give the center as "center" (radians) or
/// "turns" (fraction of the circle or exact "N/2^E" string).
json to_json(const Arc& arc);
Arc arc_from_json(const json& j, const std::string& where = "arc");

/// {"arc", "depth"}; inputs may instead give {"point"} meaning S(point).
json to_json(const CarlesonBox& box);
CarlesonBox box_from_json(const json& j, const std::string& where = "box");

/// {"center": point, "radius"}.
json to_json(const HyperbolicDisc& disc);
HyperbolicDisc disc_from_json(const json& j, const std::string& where = "disc");

/// {"label", "points": [...]} plus "tail_bound" when present.
json to_json(const Sequence& seq);
Sequence sequence_from_json(const json& j);

/// {"plate_inner": disc, "plate_outer": {"arcs" | "boxes" | "discs": [...]}}.
json to_json(const CondenserSpec& spec);
CondenserSpec condenser_from_json(const json& j);
/// A bare arc list: either [...] or {"arcs": [...]}.
std::vector<Arc> arcs_from_json(const json& j);

json to_json(const CheckReport& report);
json to_json(const ScenarioReport& report);

/// Reads and parses a JSON file; InputError with the file name and the
/// parser's line/column on failure.
json read_json_file(const std::string& path);
/// Pretty-printed JSON followed by a newline.
void write_json(const json& j, std::ostream& out);

/// "index,lhs,rhs,ratio,error" per record.
void write_records_csv(const CheckReport& report, std::ostream& out);

}  // namespace ontolab::io
