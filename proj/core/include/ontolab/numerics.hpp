#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ontolab::numerics {

/// Nodes in (-1, 1) with positive weights summing to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre rule with n points, 2 <= n <= 512. Exact for polynomials of
/// degree up to 2n - 1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Chebyshev (first kind) nodes cos((2q-1)pi/2n), q = 1..n, ordered
/// from -1 to 1. The common weight is pi / n.
std::vector<double> chebyshev_nodes(int n);

/// Dense symmetric system, row-major.
struct SymmetricSystem {
  std::size_t dimension = 0;
  std::vector<double> matrix;
  std::vector<double> rhs;

  SymmetricSystem() = default;
  explicit SymmetricSystem(std::size_t n)
      : dimension(n), matrix(n * n, 0.0), rhs(n, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return matrix[i * dimension + j]; }
  double at(std::size_t i, std::size_t j) const {
    return matrix[i * dimension + j];
  }
};

/// Solves A x = b by Cholesky factorization.
///
/// Throws InputError when the matrix is not symmetric to 1e-13 relative, and
/// DefinitenessError (with the failing pivot index) on a non-positive pivot.
std::vector<double> solve_spd(const SymmetricSystem& system);

/// Cholesky-based solve that also reports a cheap condition estimate,
/// (max pivot / min pivot)^2 of the factor.
struct SpdSolution {
  std::vector<double> x;
  double condition_estimate = 1.0;
};
SpdSolution solve_spd_with_estimate(const SymmetricSystem& system);

/// ||A x - b||_2 for a dense symmetric system.
double residual_norm(const SymmetricSystem& system, std::span<const double> x);

/// Adaptive Simpson integration with a Richardson acceptance test.
///
/// Each panel is accepted once |S_fine - S_coarse| <= 15 * tol_panel. Throws
/// AccuracyError carrying the best estimate if max_depth is exceeded.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 50);

}  // namespace ontolab::numerics
