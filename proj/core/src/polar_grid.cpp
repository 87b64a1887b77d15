#include "ontolab/polar_grid.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ontolab/errors.hpp"

namespace ontolab::numerics {

std::vector<double> graded_radial_faces(double r_min, int count,
                                        double last_cell_height) {
  if (count < 1) throw InputError("graded_radial_faces: need >= 1 cell");
  if (!(r_min >= 0.0 && r_min < 1.0)) {
    throw InputError("graded_radial_faces: r_min must lie in [0, 1)");
  }
  const double extent = 1.0 - r_min;
  std::vector<double> faces(count + 1);
  if (!(last_cell_height > 0.0) || last_cell_height * count >= extent) {
    for (int i = 0; i <= count; ++i) faces[i] = r_min + extent * i / count;
    faces[count] = 1.0;
    return faces;
  }
  // Heights h, h q, h q^2, ... from the circle inward must sum to extent.
  const double h = last_cell_height;
  auto total = [&](double q) {
    return q == 1.0 ? h * count : h * (std::pow(q, count) - 1.0) / (q - 1.0);
  };
  double lo = 1.0;
  double hi = 2.0;
  while (total(hi) < extent) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(mid) < extent ? lo : hi) = mid;
  }
  const double q = 0.5 * (lo + hi);
  faces[count] = 1.0;
  double height = h;
  for (int i = count - 1; i >= 0; --i) {
    faces[i] = faces[i + 1] - height;
    height *= q;
  }
  faces[0] = r_min;
  return faces;
}

PolarGrid PolarGrid::disc(int radial, int angular, double last_cell_height) {
  return sector(0.0, 0.0, 2.0 * std::numbers::pi, radial, angular,
                last_cell_height);
}

PolarGrid PolarGrid::sector(double r_min, double theta_start, double span,
                            int radial, int angular, double last_cell_height) {
  if (radial < 2 || angular < 3) {
    throw ResolutionError("PolarGrid: need at least 2 radial and 3 angular cells");
  }
  if (!(span > 0.0)) throw InputError("PolarGrid: sector span must be positive");
  PolarGrid g;
  g.faces_ = graded_radial_faces(r_min, radial, last_cell_height);
  g.angular_ = angular;
  g.periodic_ = span >= 2.0 * std::numbers::pi - 1e-14;
  g.span_ = g.periodic_ ? 2.0 * std::numbers::pi : span;
  g.theta_start_ = theta_start;
  return g;
}

std::vector<GridFace> interior_faces(const PolarGrid& grid) {
  const int nr = grid.radial();
  const int nt = grid.angular();
  const double dt = grid.dtheta();
  const auto& f = grid.radial_faces();
  std::vector<GridFace> out;
  out.reserve(2 * grid.cells());
  for (int i = 0; i < nr; ++i) {
    const double rc = grid.r_center(i);
    const double g_ang = (f[i + 1] - f[i]) / (rc * dt);
    const int last = grid.periodic() ? nt : nt - 1;
    for (int j = 0; j < last; ++j) {
      out.push_back({grid.index(i, j), grid.index(i, (j + 1) % nt), g_ang});
    }
    if (i + 1 < nr) {
      const double g_rad = f[i + 1] * dt / (grid.r_center(i + 1) - rc);
      for (int j = 0; j < nt; ++j) {
        out.push_back({grid.index(i, j), grid.index(i + 1, j), g_rad});
      }
    }
  }
  return out;
}

std::vector<BoundaryFace> boundary_faces(const PolarGrid& grid) {
  const int nr = grid.radial();
  const int nt = grid.angular();
  const double dt = grid.dtheta();
  const auto& f = grid.radial_faces();
  std::vector<BoundaryFace> out;
  const double g_out = f[nr] * dt / (f[nr] - grid.r_center(nr - 1));
  for (int j = 0; j < nt; ++j) {
    out.push_back({grid.index(nr - 1, j), g_out, BoundaryFace::Side::kOuter});
  }
  if (f[0] > 0.0) {
    const double g_in = f[0] * dt / (grid.r_center(0) - f[0]);
    for (int j = 0; j < nt; ++j) {
      out.push_back({grid.index(0, j), g_in, BoundaryFace::Side::kInner});
    }
  }
  if (!grid.periodic()) {
    for (int i = 0; i < nr; ++i) {
      const double g_side = (f[i + 1] - f[i]) / (grid.r_center(i) * 0.5 * dt);
      out.push_back({grid.index(i, 0), g_side, BoundaryFace::Side::kThetaLow});
      out.push_back(
          {grid.index(i, nt - 1), g_side, BoundaryFace::Side::kThetaHigh});
    }
  }
  return out;
}

std::vector<double> solve_harmonic(const PolarGrid& grid,
                                   const HarmonicProblem& problem) {
  const std::size_t n = grid.cells();
  if (problem.fixed.size() != n || problem.values.size() != n) {
    throw InputError("solve_harmonic: mask/value size does not match grid");
  }
  std::vector<long> unknown(n, -1);
  long count = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (!problem.fixed[c]) unknown[c] = count++;
  }
  std::vector<double> result(problem.values);
  if (count == 0) return result;

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> triplets;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(count);
  const auto faces = problem.faces.empty() ? interior_faces(grid) : problem.faces;
  triplets.reserve(4 * faces.size());
  for (const auto& face : faces) {
    const long ua = unknown[face.a];
    const long ub = unknown[face.b];
    if (ua >= 0) triplets.emplace_back(ua, ua, face.conductance);
    if (ub >= 0) triplets.emplace_back(ub, ub, face.conductance);
    if (ua >= 0 && ub >= 0) {
      triplets.emplace_back(ua, ub, -face.conductance);
      triplets.emplace_back(ub, ua, -face.conductance);
    } else if (ua >= 0) {
      rhs[ua] += face.conductance * problem.values[face.b];
    } else if (ub >= 0) {
      rhs[ub] += face.conductance * problem.values[face.a];
    }
  }
  for (const auto& bf : problem.boundary) {
    const long u = unknown[bf.face.cell];
    if (u < 0) continue;
    triplets.emplace_back(u, u, bf.face.conductance);
    rhs[u] += bf.face.conductance * bf.value;
  }
  Eigen::SparseMatrix<double> a(count, count);
  a.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(a);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure(
        "solve_harmonic: factorization failed (a free region is not connected "
        "to any Dirichlet data)",
        INFINITY);
  }
  const Eigen::VectorXd x = solver.solve(rhs);
  if (solver.info() != Eigen::Success || !x.allFinite()) {
    throw NumericalFailure("solve_harmonic: back substitution failed", INFINITY);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (unknown[c] >= 0) result[c] = x[unknown[c]];
  }
  return result;
}

double dirichlet_energy(const PolarGrid& grid, std::span<const double> values,
                        std::span<const DirichletFace> boundary) {
  if (values.size() != grid.cells()) {
    throw InputError("dirichlet_energy: value size does not match grid");
  }
  return dirichlet_energy(interior_faces(grid), values, boundary);
}

double dirichlet_energy(std::span<const GridFace> faces, std::span<const double> values,
                        std::span<const DirichletFace> boundary) {
  double energy = 0.0;
  for (const auto& face : faces) {
    const double d = values[face.a] - values[face.b];
    energy += face.conductance * d * d;
  }
  for (const auto& bf : boundary) {
    const double d = values[bf.face.cell] - bf.value;
    energy += bf.face.conductance * d * d;
  }
  return energy;
}

std::vector<GridFace> fitted_faces(
    const PolarGrid& grid, std::span<const std::uint8_t> fixed,
    const std::function<bool(std::size_t cell, double r, double theta)>& inside,
    double min_fraction) {
  if (fixed.size() != grid.cells()) {
    throw InputError("fitted_faces: mask size does not match grid");
  }
  auto faces = interior_faces(grid);
  const int nt = grid.angular();
  for (auto& face : faces) {
    if (fixed[face.a] == fixed[face.b]) continue;
    const std::size_t free_cell = fixed[face.a] ? face.b : face.a;
    const std::size_t plate_cell = fixed[face.a] ? face.a : face.b;
    const int ia = static_cast<int>(free_cell / nt), ja = static_cast<int>(free_cell % nt);
    const int ib = static_cast<int>(plate_cell / nt), jb = static_cast<int>(plate_cell % nt);
    const double ra = grid.r_center(ia), rb = grid.r_center(ib);
    const double ta = grid.theta_center(ja);
    const double dt = std::remainder(grid.theta_center(jb) - ta, 2 * std::numbers::pi);
    // Bisection for the first plate point along the grid line.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 30; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (inside(plate_cell, ra + mid * (rb - ra), ta + mid * dt)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    face.conductance /= std::max(hi, min_fraction);
  }
  return faces;
}

double l2_mass(const PolarGrid& grid, std::span<const double> values) {
  double mass = 0.0;
  for (int i = 0; i < grid.radial(); ++i) {
    const double area = grid.cell_area(i);
    for (int j = 0; j < grid.angular(); ++j) {
      const double v = values[grid.index(i, j)];
      mass += v * v * area;
    }
  }
  return mass;
}

}  // namespace ontolab::numerics
