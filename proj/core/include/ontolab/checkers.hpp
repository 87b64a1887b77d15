#pragma once

#include <span>
#include <vector>

#include "ontolab/report.hpp"
#include "ontolab/sequence.hpp"

namespace ontolab {

/// Weak separation. Per point i: lhs = min_j d_D(z_i, z_j), rhs = delta,
/// ratio = delta / lhs. Passes iff the global metric minimum exceeds delta.
/// extras: metric_min, hyperbolic_min (min d(z_i,z_j) / (d(z_i,0) + 1) over
/// ordered pairs), witness_i, witness_j. Needs at least two points.
CheckReport check_weak_separation(const Sequence& seq, const CheckParams& params);

/// Capacitary condition. Per point: lhs = C(union of I_{phi_{z_i}(z_j)} over
/// V_gamma(z_i)), rhs = 1 / d(z_i), ratio = lhs d(z_i). Solver failures are
/// recorded on the point and make the report fail. Warns when the sequence
/// is not weakly separated.
CheckReport check_capacitary_condition(const Sequence& seq,
                                       const CheckParams& params,
                                       int modes_per_arc);

/// Carleson-measure sampler over the supplied arc families E: lhs = sum of
/// 1/d(z_i) over z_i in S(E), rhs = C(E), ratio = lhs / rhs. Not exhaustive.
CheckReport check_carleson(const Sequence& seq,
                           std::span<const std::vector<Arc>> families,
                           const CheckParams& params, int modes_per_arc);

/// Dyadic arc families {arc k of 2^level : k} for level in [1, max_level],
/// each arc on its own; a sweep for check_carleson.
std::vector<std::vector<Arc>> dyadic_arc_families(unsigned max_level);

/// sum of 1/d(z_i) over the (finite) sequence.
double check_finite_measure(const Sequence& seq);

/// Report form of the finite-measure check: records 1/d(z_i); passes iff the
/// total plus any tail bound is finite. extras: mass, tail_bound.
CheckReport finite_measure_report(const Sequence& seq, const CheckParams& params);

/// Sufficient condition over restricted vicinities: ratio =
/// d(z_i) sum_{j in restricted V_gamma(z_i)} 1/d(z_j).
CheckReport check_theorem_d(const Sequence& seq, const CheckParams& params);

}  // namespace ontolab
