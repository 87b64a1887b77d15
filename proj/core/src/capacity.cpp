#include "ontolab/capacity.hpp"

#include "ontolab/equilibrium.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {

DiscPoint plate_point(const CarlesonBox& box) {
  return DiscPoint::from_depth(box.depth, box.base.center());
}

DiscPoint plate_point(const HyperbolicDisc& disc) { return disc.center; }

bool plates_intersect(const CondenserSpec& spec) {
  return std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        for (const auto& p : plates) {
          if constexpr (std::is_same_v<T, CarlesonBox>) {
            if (disc_intersects_box(spec.plate_inner, p)) return true;
          } else if constexpr (std::is_same_v<T, HyperbolicDisc>) {
            if (discs_intersect(spec.plate_inner, p)) return true;
          }
          // Arcs lie on the circle and never meet a hyperbolic disc.
        }
        return false;
      },
      spec.plate_outer);
}

CondenserCapacity condenser_capacity(const DiscPoint& z, const PlateSet& targets,
                                     int modes_per_arc) {
  CondenserCapacity out;
  const bool empty = std::visit([](const auto& v) { return v.empty(); }, targets);
  if (empty) return out;
  std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        if constexpr (!std::is_same_v<T, Arc>) {
          for (const auto& p : plates) {
            if (2 * plate_point(p).depth() > z.depth()) out.comparability_warning = true;
          }
        }
      },
      targets);
  const CondenserSpec spec{HyperbolicDisc{z, 1.0}, targets};
  if (plates_intersect(spec)) {
    out.plates_intersect = true;
    out.note = "plates intersect; capacity is 0 by convention";
    return out;
  }
  std::vector<Arc> arcs;
  std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        for (const auto& p : plates) {
          if constexpr (std::is_same_v<T, Arc>) {
            arcs.push_back(mobius_arc_image(z, p));
          } else {
            arcs.push_back(boundary_arc(mobius(z, plate_point(p))));
          }
        }
      },
      targets);
  out.image_arcs = merge_arcs(arcs);
  out.value = log_capacity(out.image_arcs, modes_per_arc);
  if (out.comparability_warning) {
    out.note = "a target is not deep enough relative to z; the arc reduction "
               "is only heuristic here";
  }
  return out;
}

}  // namespace ontolab
