#pragma once

#include <span>
#include <vector>

#include "ontolab/disc_geometry.hpp"

namespace ontolab {

/// Discrete equilibrium measure of a finite union of disjoint arcs for the
/// logarithmic kernel log(2 / |zeta - zeta'|).
///
/// On each arc the density is a truncated Chebyshev series
/// sum_k c_k T_k(x) / sqrt(1 - x^2) in the arc coordinate x in [-1, 1], which
/// carries the inverse square-root blow-up at the endpoints exactly. `nodes`
/// and `weights` sample it at Gauss-Chebyshev points (weights sum to 1).
struct EquilibriumMeasure {
  std::vector<Arc> arcs;
  std::vector<double> nodes;    ///< boundary angles (radians)
  std::vector<double> weights;  ///< point masses, >= 0, summing to 1
  std::vector<std::vector<double>> coefficients;  ///< per arc c_k
  double energy = 0.0;              ///< minimal energy (the Robin constant)
  double condition_estimate = 1.0;  ///< of the Galerkin system

  /// Mass carried by arc a.
  double arc_mass(std::size_t a) const;
  /// Logarithmic potential integral log(2 / |e^{i angle} - zeta|) d mu.
  double potential(double angle) const;
};

/// Minimizes the logarithmic energy over probability measures on the arcs.
/// `modes_per_arc` (>= 8) is the number of Chebyshev modes per arc; the inner
/// quadrature uses 4x as many Gauss-Chebyshev points.
///
/// Throws InputError for overlapping arcs, a full circle, or modes < 8, and
/// NumericalFailure (with a condition estimate) if the regularized system
/// cannot be factored.
EquilibriumMeasure equilibrium_measure(std::span<const Arc> arcs,
                                       int modes_per_arc);

/// C(E) = cap(Delta_1(0), E): the condenser capacity (Dirichlet energy in
/// dx dy) between the closed hyperbolic unit disc about 0 and the arcs.
///
/// Computed as 1 / min energy of the Green kernel of the annulus
/// tanh(1) < |z| < 1 (Dirichlet inside, Neumann on the circle) restricted to
/// the circle. Returns 0 for no arcs and 2 pi / log(1 / tanh 1) for T.
/// Overlapping arcs are merged first.
double log_capacity(std::span<const Arc> arcs, int modes_per_arc);

/// Capacity of the full circle, 2 pi / log(1 / tanh 1).
double full_circle_capacity();

}  // namespace ontolab
