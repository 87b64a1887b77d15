#include "ontolab/sobolev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ontolab/checkers.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {

namespace {

/// Depth range [outer, inner] and angular half-width (radians) of the
/// Euclidean disc Delta_1(z).
struct DiscExtent {
  long double outer_depth;
  long double inner_depth;
  long double half_width;
};

DiscExtent unit_disc_extent(const DiscPoint& z) {
  const long double t = std::tanh(1.0L);
  const long double delta = z.depth();
  const long double r = 1.0L - delta;
  const long double denom = 1.0L - t * t * r * r;
  const long double center_depth = delta * (1.0L + t * t * r) / denom;
  const long double radius = t * delta * (2.0L - delta) / denom;
  const long double outer = delta * (1.0L - t) * (1.0L - t * r) / denom;
  const long double c = 1.0L - center_depth;
  const long double half = radius >= c ? std::numbers::pi_v<long double>
                                       : std::asin(radius / c);
  return {outer, center_depth + radius, half};
}

}  // namespace

SobolevBlocks sobolev_blocks(const Sequence& seq, double gamma,
                             GridResolution resolution) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw InputError("sobolev: gamma must lie in (0, 1)");
  if (resolution.radial < 4 || resolution.angular < 4) {
    throw InputError("sobolev: grid resolution must be at least 4x4");
  }
  SobolevBlocks out;
  out.resolution = resolution;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const DiscPoint& z = seq[i];
    const CarlesonBox outer_box = expanded_box(z, gamma);
    const DiscExtent ext = unit_disc_extent(z);
    const long double box_half = std::numbers::pi_v<long double> * outer_box.base.length();
    if (ext.inner_depth > outer_box.depth || ext.half_width > box_half) {
      throw InputError("sobolev: Delta_1(z_" + std::to_string(i) +
                       ") is not contained in S^gamma(z_" + std::to_string(i) +
                       "); use deeper points or a smaller gamma");
    }
    const HyperbolicDisc unit{z, 1.0};
    std::vector<CarlesonBox> holes;
    for (std::size_t j : vicinity(seq, i, gamma)) {
      holes.push_back(expanded_box(seq[j], gamma));
      if (disc_intersects_box(unit, holes.back())) {
        throw InputError("sobolev: Delta_1(z_" + std::to_string(i) +
                         ") meets S^gamma(z_" + std::to_string(j) +
                         ") of its vicinity");
      }
    }

    SobolevBlock block;
    block.index = i;
    block.kernel_norm = seq.kernel_norm(i);
    GridPotential& u = block.potential;
    const double span = outer_box.base.is_full()
                            ? 2 * std::numbers::pi
                            : static_cast<double>(2 * box_half);
    const double start = z.theta() - span / 2;
    u.grid = numerics::PolarGrid::sector(static_cast<double>(1.0L - outer_box.depth),
                                         start, span, resolution.radial,
                                         resolution.angular,
                                         static_cast<double>(ext.outer_depth / 8));
    const auto& grid = u.grid;
    const std::size_t n = grid.cells();
    u.values.assign(n, 0.0);
    u.plate.assign(n, GridPotential::kFree);
    std::size_t inner_cells = 0;
    for (int a = 0; a < grid.radial(); ++a) {
      for (int b = 0; b < grid.angular(); ++b) {
        const std::size_t c = grid.index(a, b);
        const DiscPoint w = DiscPoint::from_polar(grid.r_center(a), grid.theta_center(b));
        if (unit.contains(w)) {
          u.plate[c] = GridPotential::kOuter;
          u.values[c] = 1.0;
          ++inner_cells;
          continue;
        }
        for (const auto& h : holes) {
          if (box_contains_point(h, w)) {
            u.plate[c] = GridPotential::kInner;
            break;
          }
        }
      }
    }
    if (inner_cells < 4) {
      throw ResolutionError("sobolev: Delta_1(z_" + std::to_string(i) + ") covers only " +
                            std::to_string(inner_cells) + " cells at resolution " +
                            std::to_string(resolution.radial) + "x" +
                            std::to_string(resolution.angular));
    }
    for (const auto& f : numerics::boundary_faces(grid)) {
      if (f.side != numerics::BoundaryFace::Side::kOuter) u.faces.push_back({f, 0.0});
    }
    numerics::HarmonicProblem problem;
    problem.fixed.resize(n);
    for (std::size_t c = 0; c < n; ++c) problem.fixed[c] = u.plate[c] != 0;
    problem.values = u.values;
    problem.boundary = u.faces;
    auto in_plate = [&](std::size_t cell, double r, double theta) {
      const DiscPoint w = DiscPoint::from_polar(r, theta);
      if (u.plate[cell] == GridPotential::kOuter) return unit.contains(w);
      for (const auto& h : holes) {
        if (box_contains_point(h, w)) return true;
      }
      return false;
    };
    u.couplings = numerics::fitted_faces(grid, problem.fixed, in_plate);
    problem.faces = u.couplings;
    u.values = numerics::solve_harmonic(grid, problem);
    u.energy = grid_energy(u);
    block.energy = u.energy;
    block.mass = numerics::l2_mass(grid, u.values);
    out.constant = std::max(out.constant, block.cost());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

SobolevInterpolant assemble(const SobolevBlocks& blocks, std::span<const double> data) {
  if (data.size() != blocks.blocks.size()) {
    throw InputError("sobolev: data has " + std::to_string(data.size()) +
                     " entries for " + std::to_string(blocks.blocks.size()) + " points");
  }
  SobolevInterpolant f;
  f.constant = blocks.constant;
  f.values.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) {
      throw InputError("sobolev: data[" + std::to_string(i) + "] is not finite");
    }
    const SobolevBlock& b = blocks.blocks[i];
    const double scale = data[i] * std::sqrt(b.kernel_norm);
    std::vector<double> v(b.potential.values.size());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = scale * b.potential.values[c];
    f.values.push_back(std::move(v));
    f.energy += data[i] * data[i] * b.cost();
    f.data_norm_sq += data[i] * data[i];
  }
  return f;
}

SobolevInterpolant assemble_sobolev_interpolant(const Sequence& seq,
                                                std::span<const double> data,
                                                const CheckParams& params,
                                                GridResolution resolution,
                                                bool verify_preconditions,
                                                int modes_per_arc) {
  if (data.size() != seq.size()) {
    throw InputError("sobolev: data has " + std::to_string(data.size()) +
                     " entries for " + std::to_string(seq.size()) + " points");
  }
  if (verify_preconditions) {
    if (seq.size() >= 2 && !check_weak_separation(seq, params).pass) {
      throw InputError("sobolev: sequence is not weakly separated");
    }
    if (!check_capacitary_condition(seq, params, modes_per_arc).pass) {
      throw InputError("sobolev: sequence fails the capacitary condition");
    }
  }
  return assemble(sobolev_blocks(seq, params.gamma, resolution), data);
}

}  // namespace ontolab
