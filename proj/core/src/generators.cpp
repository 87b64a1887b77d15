#include "ontolab/generators.hpp"

#include <cmath>
#include <limits>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {

Sequence generate_radial(double lambda, unsigned count, double angle) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw InputError("radial: need 0 < lambda < 1");
  Sequence seq({}, "radial");
  const Turns t = Turns::from_radians(angle);
  for (unsigned n = 1; n <= count; ++n) {
    seq.push_back(DiscPoint::from_depth(std::pow(static_cast<long double>(lambda), n), t));
  }
  seq.set_tail_bound(std::numeric_limits<double>::infinity());
  return seq;
}

Sequence generate_radial_power(double lambda, double p, unsigned count,
                               double angle) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw InputError("radial_power: need 0 < lambda < 1");
  }
  if (!(p > 1.0)) throw InputError("radial_power: need p > 1");
  Sequence seq({}, "radial_power");
  const Turns t = Turns::from_radians(angle);
  const long double log_lambda = std::log(static_cast<long double>(lambda));
  for (unsigned n = 1; n <= count; ++n) {
    const long double depth = std::exp(std::pow(static_cast<long double>(n), p) * log_lambda);
    if (!(depth > 0.0L)) {
      throw InputError("radial_power: point " + std::to_string(n) +
                       " is deeper than the representable range");
    }
    seq.push_back(DiscPoint::from_depth(depth, t));
  }
  // 1/d(z) <= 2 / (n^p log(1/lambda)) once n^p log(1/lambda) >= 2 log 2.
  const double big_l = -std::log(lambda);
  const double nn = std::max(1u, count);
  if (std::pow(nn, p) * big_l >= 2 * std::log(2.0)) {
    seq.set_tail_bound(2.0 / ((p - 1.0) * std::pow(nn, p - 1.0) * big_l));
  } else {
    seq.set_tail_bound(std::numeric_limits<double>::infinity());
  }
  return seq;
}

Sequence generate_disjoint_boxes(const DisjointBoxesParams& params) {
  if (!(params.depth_min > 0.0 && params.depth_min <= params.depth_max &&
        params.depth_max < 1.0)) {
    throw InputError("disjoint_boxes: need 0 < depth_min <= depth_max < 1");
  }
  if (!(params.eta > 0.0 && params.eta <= 1.0)) {
    throw InputError("disjoint_boxes: eta must lie in (0, 1]");
  }
  if (params.sectors > 0 && params.sector_parity > 1) {
    throw InputError("disjoint_boxes: sector_parity must be 0 or 1");
  }
  PortableRng rng(params.seed);
  Sequence seq({}, "disjoint_boxes");
  std::vector<CarlesonBox> boxes = params.forbidden;
  const long double lo = std::log(static_cast<long double>(params.depth_min));
  const long double hi = std::log(static_cast<long double>(params.depth_max));
  for (unsigned n = 0; n < params.count; ++n) {
    bool placed = false;
    for (unsigned attempt = 0; attempt < params.max_attempts && !placed; ++attempt) {
      const long double depth = std::exp(lo + (hi - lo) * rng.uniform());
      long double turns = rng.uniform();
      if (params.sectors > 0) {
        const auto s = rng.below(params.sectors);
        turns = (2.0L * s + params.sector_parity + turns) / (2.0L * params.sectors);
      }
      const DiscPoint z = DiscPoint::from_depth(depth, Turns::from_fraction(turns));
      const CarlesonBox box = expanded_box(z, params.eta);
      bool clear = true;
      for (const auto& b : boxes) {
        if (boxes_intersect(b, box)) {
          clear = false;
          break;
        }
      }
      if (clear) {
        boxes.push_back(box);
        seq.push_back(z);
        placed = true;
      }
    }
    if (!placed) {
      throw InputError("disjoint_boxes: could not place point #" + std::to_string(n) +
                       " after " + std::to_string(params.max_attempts) + " attempts");
    }
  }
  // The construction guarantees disjointness; assert it independently.
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (boxes_intersect(expanded_box(seq[i], params.eta),
                          expanded_box(seq[j], params.eta))) {
        throw NumericalFailure("disjoint_boxes: placement invariant violated", 0.0);
      }
    }
  }
  return seq;
}

Sequence generate_comb(unsigned m, long double turns, bool include_anchor,
                       bool include_spine) {
  if (m < 1 || m > 100) throw InputError("comb: need 1 <= m <= 100");
  const CombSpec spec{node_near(m * m, turns)};
  Sequence seq({}, "comb_m" + std::to_string(m));
  if (include_anchor) seq.push_back(embed(spec.anchor));
  if (include_spine) {
    const auto spine = comb_spine(spec);
    for (std::size_t i = 1; i < spine.size(); ++i) seq.push_back(embed(spine[i]));
  }
  for (const auto& t : comb_teeth(spec)) seq.push_back(embed(t));
  return seq;
}

Sequence generate(const std::string& kind, const nlohmann::json& params,
                  std::uint64_t seed) {
  try {
    if (kind == "radial") {
      return generate_radial(params.value("lambda", 0.5), params.value("n", 8u),
                             params.value("angle", 0.0));
    }
    if (kind == "radial_power") {
      return generate_radial_power(params.value("lambda", 0.5), params.value("p", 2.0),
                                   params.value("n", 8u), params.value("angle", 0.0));
    }
    if (kind == "disjoint_boxes") {
      DisjointBoxesParams p;
      p.count = params.value("count", p.count);
      p.depth_min = params.value("depth_min", p.depth_min);
      p.depth_max = params.value("depth_max", p.depth_max);
      p.eta = params.value("eta", p.eta);
      p.sectors = params.value("sectors", p.sectors);
      p.sector_parity = params.value("sector_parity", p.sector_parity);
      p.seed = params.value("seed", seed);
      return generate_disjoint_boxes(p);
    }
    if (kind == "comb") {
      return generate_comb(params.value("m", 4u), params.value("turns", 0.0),
                           params.value("include_anchor", true),
                           params.value("include_spine", false));
    }
    if (kind == "union") {
      if (!params.contains("parts") || !params["parts"].is_array()) {
        throw InputError("union: params.parts must be an array");
      }
      Sequence out;
      std::uint64_t part_seed = seed;
      for (const auto& part : params["parts"]) {
        out = concatenate(out, generate(part.at("kind").get<std::string>(),
                                        part.value("params", nlohmann::json::object()),
                                        part_seed++));
      }
      return out;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("generate " + kind + ": bad parameters (" + e.what() + ")");
  }
  throw InputError("generate: unknown kind '" + kind + "'");
}

}  // namespace ontolab
