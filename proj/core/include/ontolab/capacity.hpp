#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ontolab/disc_geometry.hpp"

namespace ontolab {

/// The outer plate of a condenser in the unit disc.
using PlateSet = std::variant<std::vector<Arc>, std::vector<CarlesonBox>,
                              std::vector<HyperbolicDisc>>;

/// Condenser (D, plate_inner, plate_outer).
struct CondenserSpec {
  HyperbolicDisc plate_inner;
  PlateSet plate_outer;
};

/// A target point standing for a box S(w) / disc Delta(w): for a box, the
/// point at its depth above the arc center; for a disc, its center.
DiscPoint plate_point(const CarlesonBox& box);
DiscPoint plate_point(const HyperbolicDisc& disc);

/// True when the inner plate meets some outer plate component.
bool plates_intersect(const CondenserSpec& spec);

struct CondenserCapacity {
  double value = 0.0;
  bool plates_intersect = false;
  /// A box/disc target w violates 1 - |w| <= (1 - |z|) / 2, so the arc
  /// reduction is outside its comparability range.
  bool comparability_warning = false;
  std::vector<Arc> image_arcs;  ///< merged arcs whose C(.) was taken
  std::string note;
};

/// cap(Delta_1(z), targets) via transfer to the origin:
///  * arcs: C(phi_z(E)) (exact by conformal invariance);
///  * boxes S(w) / discs Delta(w): C(union of I_{phi_z(w)}), comparable to
///    the condenser capacity when 1 - |w| <= (1 - |z|) / 2.
/// Intersecting plates give 0 by convention.
CondenserCapacity condenser_capacity(const DiscPoint& z, const PlateSet& targets,
                                     int modes_per_arc);

}  // namespace ontolab
