#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ontolab::numerics {

/// Tensor grid over {r_min <= r <= 1} x {theta_start <= theta < theta_start +
/// span}. Radial cell heights grow geometrically away from the unit circle so
/// that the outermost cell has a prescribed height; angular cells are uniform.
/// A full-circle grid is periodic in theta.
class PolarGrid {
 public:
  PolarGrid() = default;

  /// Whole disc, r in [0, 1], periodic.
  static PolarGrid disc(int radial, int angular, double last_cell_height);

  /// Sector r in [r_min, 1], theta in [theta_start, theta_start + span].
  /// A span of 2*pi or more yields a periodic annulus.
  static PolarGrid sector(double r_min, double theta_start, double span,
                          int radial, int angular, double last_cell_height);

  int radial() const { return static_cast<int>(faces_.size()) - 1; }
  int angular() const { return angular_; }
  std::size_t cells() const {
    return static_cast<std::size_t>(radial()) * angular_;
  }
  bool periodic() const { return periodic_; }
  double theta_start() const { return theta_start_; }
  double span() const { return span_; }
  double dtheta() const { return span_ / angular_; }
  double r_min() const { return faces_.front(); }

  const std::vector<double>& radial_faces() const { return faces_; }
  double r_center(int i) const { return 0.5 * (faces_[i] + faces_[i + 1]); }
  double theta_center(int j) const { return theta_start_ + (j + 0.5) * dtheta(); }
  double cell_area(int i) const {
    return 0.5 * (faces_[i + 1] * faces_[i + 1] - faces_[i] * faces_[i]) *
           dtheta();
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * angular_ + j;
  }

 private:
  std::vector<double> faces_;
  double theta_start_ = 0.0;
  double span_ = 0.0;
  int angular_ = 0;
  bool periodic_ = true;
};

/// Radial face positions on [r_min, 1] with `count` cells whose outermost cell
/// has height at most `last_cell_height` (uniform when that already holds).
std::vector<double> graded_radial_faces(double r_min, int count,
                                        double last_cell_height);

/// Coupling between two cells: the energy contribution is g (u_a - u_b)^2.
struct GridFace {
  std::size_t a;
  std::size_t b;
  double conductance;
};

/// Coupling between a cell and a prescribed boundary value on one of the
/// grid's outer edges: contributes g (u_cell - value)^2.
struct BoundaryFace {
  enum class Side : std::uint8_t { kOuter, kInner, kThetaLow, kThetaHigh };
  std::size_t cell;
  double conductance;
  Side side;
};

/// Finite-volume couplings of the 5-point polar Laplacian. The sum of
/// g (u_a - u_b)^2 over faces approximates the Dirichlet integral in dx dy.
std::vector<GridFace> interior_faces(const PolarGrid& grid);

/// All edge couplings (half-cell distance to the boundary). The circle r = 1
/// contributes kOuter faces; r_min > 0 contributes kInner; non-periodic grids
/// contribute the two theta sides. Faces at r = 0 are omitted (zero length).
std::vector<BoundaryFace> boundary_faces(const PolarGrid& grid);

/// A face of boundary_faces() with an imposed Dirichlet value. Boundary faces
/// absent from the problem are Neumann (zero flux).
struct DirichletFace {
  BoundaryFace face;
  double value;
};

struct HarmonicProblem {
  std::vector<std::uint8_t> fixed;   ///< 1 for cells with prescribed values
  std::vector<double> values;        ///< prescribed values (others ignored)
  std::vector<DirichletFace> boundary;
  /// Cell couplings; empty means interior_faces(grid).
  std::vector<GridFace> faces;
};

/// Boundary-fitted couplings: every face between a free cell a and a fixed
/// cell b is strengthened by 1 / t, where t in (0, 1] is the fraction of the
/// center-to-center grid line (from a) at which `inside(b, r, theta)` first
/// holds. The prescribed value then sits on the actual plate boundary
/// instead of the fixed cell's center (second-order Shortley-Weller
/// treatment). t is clamped below at min_fraction.
std::vector<GridFace> fitted_faces(
    const PolarGrid& grid, std::span<const std::uint8_t> fixed,
    const std::function<bool(std::size_t cell, double r, double theta)>& inside,
    double min_fraction = 1e-2);

/// Discrete harmonic extension: minimizes the discrete Dirichlet energy with
/// the prescribed cells and faces. Returns the full cell vector.
std::vector<double> solve_harmonic(const PolarGrid& grid,
                                   const HarmonicProblem& problem);

/// Discrete Dirichlet energy of `values` including the Dirichlet faces.
double dirichlet_energy(const PolarGrid& grid, std::span<const double> values,
                        std::span<const DirichletFace> boundary);
/// Same, with explicit cell couplings.
double dirichlet_energy(std::span<const GridFace> faces, std::span<const double> values,
                        std::span<const DirichletFace> boundary);

/// Sum of u^2 * cell area (the L^2 mass in dx dy).
double l2_mass(const PolarGrid& grid, std::span<const double> values);

}  // namespace ontolab::numerics
