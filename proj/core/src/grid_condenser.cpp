#include "ontolab/grid_condenser.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "ontolab/errors.hpp"

namespace ontolab {

namespace {

long double shallowest_depth_needed(const CondenserSpec& spec) {
  long double d = spec.plate_inner.center.depth();
  std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        for (const auto& p : plates) {
          if constexpr (std::is_same_v<T, CarlesonBox>) {
            d = std::min(d, p.depth);
          } else if constexpr (std::is_same_v<T, HyperbolicDisc>) {
            d = std::min(d, p.center.depth());
          }
        }
      },
      spec.plate_outer);
  return d;
}

std::string describe(const GridResolution& r) {
  return std::to_string(r.radial) + "x" + std::to_string(r.angular);
}

}  // namespace

GridPotential grid_condenser_capacity(const CondenserSpec& spec,
                                      GridResolution resolution) {
  GridPotential u;
  const long double depth = shallowest_depth_needed(spec);
  u.grid = numerics::PolarGrid::disc(resolution.radial, resolution.angular,
                                     static_cast<double>(depth / 8));
  const auto& grid = u.grid;
  const std::size_t n = grid.cells();
  u.values.assign(n, 0.0);
  u.plate.assign(n, GridPotential::kFree);
  if (plates_intersect(spec)) {
    u.plates_intersect = true;
    return u;
  }

  std::vector<DiscPoint> centers;
  centers.reserve(n);
  for (int i = 0; i < grid.radial(); ++i) {
    for (int j = 0; j < grid.angular(); ++j) {
      centers.push_back(DiscPoint::from_polar(grid.r_center(i), grid.theta_center(j)));
    }
  }

  std::size_t inner_count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (spec.plate_inner.contains(centers[c])) {
      u.plate[c] = GridPotential::kInner;
      ++inner_count;
    }
  }
  if (inner_count < 4) {
    throw ResolutionError("plate_inner covers only " + std::to_string(inner_count) +
                          " cells at resolution " + describe(resolution));
  }

  const auto circle = numerics::boundary_faces(grid);
  std::visit(
      [&](const auto& plates) {
        using T = typename std::decay_t<decltype(plates)>::value_type;
        for (std::size_t k = 0; k < plates.size(); ++k) {
          std::size_t count = 0;
          if constexpr (std::is_same_v<T, Arc>) {
            for (const auto& f : circle) {
              if (f.side != numerics::BoundaryFace::Side::kOuter) continue;
              const int j = static_cast<int>(f.cell % grid.angular());
              if (arc_contains_angle(plates[k],
                                     Turns::from_radians(grid.theta_center(j)))) {
                u.faces.push_back({f, 1.0});
                ++count;
              }
            }
          } else {
            for (std::size_t c = 0; c < n; ++c) {
              bool inside = false;
              if constexpr (std::is_same_v<T, CarlesonBox>) {
                inside = box_contains_point(plates[k], centers[c]);
              } else {
                inside = plates[k].contains(centers[c]);
              }
              if (inside) {
                u.plate[c] = GridPotential::kOuter;
                u.values[c] = 1.0;
                ++count;
              }
            }
          }
          if (count < 4) {
            throw ResolutionError("plate_outer[" + std::to_string(k) +
                                  "] covers only " + std::to_string(count) +
                                  " cells at resolution " + describe(resolution));
          }
        }
      },
      spec.plate_outer);

  numerics::HarmonicProblem problem;
  problem.fixed.resize(n);
  for (std::size_t c = 0; c < n; ++c) problem.fixed[c] = u.plate[c] != 0;
  problem.values = u.values;
  problem.boundary = u.faces;
  auto in_plate = [&](std::size_t cell, double r, double theta) {
    const DiscPoint w = DiscPoint::from_polar(r, theta);
    if (u.plate[cell] == GridPotential::kInner) return spec.plate_inner.contains(w);
    return std::visit(
        [&](const auto& plates) {
          using T = typename std::decay_t<decltype(plates)>::value_type;
          for (const auto& p : plates) {
            if constexpr (std::is_same_v<T, CarlesonBox>) {
              if (box_contains_point(p, w)) return true;
            } else if constexpr (std::is_same_v<T, HyperbolicDisc>) {
              if (p.contains(w)) return true;
            }
          }
          return false;
        },
        spec.plate_outer);
  };
  u.couplings = numerics::fitted_faces(grid, problem.fixed, in_plate);
  problem.faces = u.couplings;
  u.values = numerics::solve_harmonic(grid, problem);
  u.energy = grid_energy(u);
  return u;
}

double grid_energy(const GridPotential& u) {
  if (u.couplings.empty()) return numerics::dirichlet_energy(u.grid, u.values, u.faces);
  return numerics::dirichlet_energy(u.couplings, u.values, u.faces);
}

double capacity_upper_bound(const GridPotential& u, double a, double b) {
  if (!(a < b)) throw DomainError("capacity_upper_bound: need a < b");
  constexpr double kSlack = 1e-12;
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    if (u.plate[c] == GridPotential::kInner && u.values[c] > a + kSlack) {
      throw InputError("capacity_upper_bound: u exceeds a on the inner plate");
    }
    if (u.plate[c] == GridPotential::kOuter && u.values[c] < b - kSlack) {
      throw InputError("capacity_upper_bound: u is below b on the outer plate");
    }
  }
  for (const auto& f : u.faces) {
    if (f.value < b - kSlack) {
      throw InputError("capacity_upper_bound: u is below b on an arc plate");
    }
  }
  return grid_energy(u) / ((b - a) * (b - a));
}

void write_potential_csv(const GridPotential& u, std::ostream& out) {
  out << "r,theta,value\n";
  out.precision(17);
  for (int i = 0; i < u.radial(); ++i) {
    for (int j = 0; j < u.angular(); ++j) {
      out << u.grid.r_center(i) << ',' << u.grid.theta_center(j) << ','
          << u.values[u.grid.index(i, j)] << '\n';
    }
  }
}

}  // namespace ontolab
