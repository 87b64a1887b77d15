#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "ontolab/sequence.hpp"

namespace ontolab {

/// Uniform doubles from raw mt19937_64 output (53 high bits), so sequences
/// are reproducible across standard library implementations.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 engine_;
};

/// z_n = (1 - lambda^n) e^{i angle}, n = 1..count. The associated measure of
/// the infinite family diverges, so the tail bound is +inf.
Sequence generate_radial(double lambda, unsigned count, double angle = 0.0);

/// z_n = (1 - lambda^(n^p)) e^{i angle}, p > 1, with the finite tail bound
/// 2 / ((p - 1) count^(p - 1) log(1 / lambda)).
Sequence generate_radial_power(double lambda, double p, unsigned count,
                               double angle = 0.0);

struct DisjointBoxesParams {
  unsigned count = 20;
  double depth_min = 1e-4;  ///< depths are log-uniform in [min, max]
  double depth_max = 1e-2;
  double eta = 0.9;          ///< S^eta boxes are kept pairwise disjoint
  std::uint64_t seed = 1;
  /// With sectors > 0, angles are drawn from the sectors
  /// [(2s + parity) / (2 sectors), (2s + parity + 1) / (2 sectors)) turns.
  unsigned sectors = 0;
  unsigned sector_parity = 0;
  std::vector<CarlesonBox> forbidden;  ///< boxes the new S^eta boxes avoid
  unsigned max_attempts = 20000;
};

/// Greedy random placement with pairwise disjoint S^eta boxes. Throws
/// InputError naming the first point that cannot be placed.
Sequence generate_disjoint_boxes(const DisjointBoxesParams& params);

/// Anchor at level m^2 nearest to `turns`, followed by its m comb teeth
/// (optionally with the spine w_1..w_m as well).
Sequence generate_comb(unsigned m, long double turns, bool include_anchor = true,
                       bool include_spine = false);

/// Dispatcher used by the command line tool. Kinds: radial, radial_power,
/// disjoint_boxes, comb, union (params {"parts": [{kind, params}, ...]}).
Sequence generate(const std::string& kind, const nlohmann::json& params,
                  std::uint64_t seed);

}  // namespace ontolab
