#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ontolab/capacity.hpp"
#include "ontolab/polar_grid.hpp"

namespace ontolab {

struct GridResolution {
  int radial = 128;
  int angular = 256;
};

/// Discrete equilibrium potential of a condenser on a polar grid.
struct GridPotential {
  enum Plate : std::uint8_t { kFree = 0, kInner = 1, kOuter = 2 };

  numerics::PolarGrid grid;
  std::vector<double> values;         ///< per cell, in [0, 1]
  std::vector<std::uint8_t> plate;    ///< per cell Plate tag
  /// Circle faces carrying an arc plate, with the prescribed value.
  std::vector<numerics::DirichletFace> faces;
  /// Boundary-fitted cell couplings used by the solve (see fitted_faces).
  std::vector<numerics::GridFace> couplings;
  double energy = 0.0;
  bool plates_intersect = false;

  int radial() const { return grid.radial(); }
  int angular() const { return grid.angular(); }
};

/// Solves the mixed problem: 0 on the inner plate cells, 1 on the outer plate
/// (cells for boxes/discs, circle faces for arcs), zero flux on the rest of
/// the circle. Cells belong to a plate when their center does.
///
/// Faces between a free cell and a plate cell are boundary-fitted, so the
/// plate values sit on the plate boundaries rather than at cell centers.
///
/// Radial cells are graded so the outermost has height at most
/// (1 - |z|) / 8 for the deepest plate point z. Throws ResolutionError when a
/// plate component covers fewer than 4 cells (or circle faces).
GridPotential grid_condenser_capacity(const CondenserSpec& spec,
                                      GridResolution resolution);

/// Discrete Dirichlet energy of the stored values and faces.
double grid_energy(const GridPotential& u);

/// energy(u) / (b - a)^2: an upper bound for the capacity when u <= a on the
/// inner plate and u >= b on the outer plate. Throws DomainError for a >= b
/// and InputError when u violates those bounds.
double capacity_upper_bound(const GridPotential& u, double a, double b);

/// "r,theta,value" lines with a header, one per cell.
void write_potential_csv(const GridPotential& u, std::ostream& out);

}  // namespace ontolab
