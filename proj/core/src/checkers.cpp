#include "ontolab/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ontolab/equilibrium.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {

void CheckReport::finalize() {
  sup_ratio = 0.0;
  witness_index.reset();
  bool failed = false;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (!records[r].error.empty()) {
      failed = true;
      continue;
    }
    const double v = records[r].ratio;
    if (!witness_index || v > sup_ratio || std::isnan(v)) {
      if (std::isnan(v)) failed = true;
      sup_ratio = v;
      witness_index = r;
    }
  }
  if (records.empty()) sup_ratio = 0.0;
  pass = !failed && sup_ratio <= params.k;
}

CheckReport check_weak_separation(const Sequence& seq, const CheckParams& params) {
  if (seq.size() < 2) throw InputError("weak separation needs at least 2 points");
  CheckReport rep;
  rep.condition_name = "weak_separation";
  rep.params = params;
  const std::size_t n = seq.size();
  std::vector<double> dist0(n);
  const DiscPoint origin;
  for (std::size_t i = 0; i < n; ++i) dist0[i] = hyperbolic_distance(origin, seq[i]);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  double hyper_min = std::numeric_limits<double>::infinity();
  double metric_min = std::numeric_limits<double>::infinity();
  std::size_t wi = 0, wj = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = dirichlet_metric(seq[i], seq[j]);
      nearest[i] = std::min(nearest[i], m);
      nearest[j] = std::min(nearest[j], m);
      if (m < metric_min) {
        metric_min = m;
        wi = i;
        wj = j;
      }
      const double h = hyperbolic_distance(seq[i], seq[j]);
      hyper_min = std::min({hyper_min, h / (dist0[i] + 1), h / (dist0[j] + 1)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double ratio = nearest[i] > 0 ? params.delta / nearest[i]
                                        : std::numeric_limits<double>::infinity();
    rep.records.push_back({i, nearest[i], params.delta, ratio, {}});
  }
  rep.finalize();
  rep.pass = metric_min > params.delta;
  rep.extras["metric_min"] = metric_min;
  rep.extras["hyperbolic_min"] = hyper_min;
  rep.extras["witness_i"] = static_cast<double>(wi);
  rep.extras["witness_j"] = static_cast<double>(wj);
  return rep;
}

CheckReport check_capacitary_condition(const Sequence& seq,
                                       const CheckParams& params,
                                       int modes_per_arc) {
  CheckReport rep;
  rep.condition_name = "capacitary_condition";
  rep.params = params;
  if (seq.size() >= 2) {
    const auto ws = check_weak_separation(seq, params);
    if (!ws.pass) {
      rep.warnings.push_back("sequence is not weakly separated (min d_D = " +
                             std::to_string(ws.extras.at("metric_min")) + ")");
    }
  }
  std::size_t nonempty = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CheckRecord rec{i, 0.0, 1.0 / seq.kernel_norm(i), 0.0, {}};
    try {
      const auto v = vicinity(seq, i, params.gamma);
      if (!v.empty()) {
        ++nonempty;
        std::vector<Arc> arcs;
        for (std::size_t j : v) arcs.push_back(boundary_arc(mobius(seq[i], seq[j])));
        rec.lhs = log_capacity(arcs, modes_per_arc);
        rec.ratio = rec.lhs * seq.kernel_norm(i);
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rep.records.push_back(rec);
  }
  rep.extras["nonempty_vicinities"] = static_cast<double>(nonempty);
  rep.finalize();
  return rep;
}

CheckReport check_carleson(const Sequence& seq,
                           std::span<const std::vector<Arc>> families,
                           const CheckParams& params, int modes_per_arc) {
  CheckReport rep;
  rep.condition_name = "carleson_measure";
  rep.params = params;
  for (std::size_t f = 0; f < families.size(); ++f) {
    CheckRecord rec{f, 0.0, 0.0, 0.0, {}};
    try {
      const auto arcs = merge_arcs(families[f]);
      double mass = 0.0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        for (const auto& arc : arcs) {
          if (box_contains_point(CarlesonBox{arc, arc.length()}, seq[i])) {
            mass += 1.0 / seq.kernel_norm(i);
            break;
          }
        }
      }
      rec.lhs = mass;
      rec.rhs = log_capacity(arcs, modes_per_arc);
      rec.ratio = mass == 0.0 ? 0.0 : mass / rec.rhs;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    rep.records.push_back(rec);
  }
  rep.warnings.push_back("sampler over the supplied arc families only");
  rep.finalize();
  return rep;
}

std::vector<std::vector<Arc>> dyadic_arc_families(unsigned max_level) {
  std::vector<std::vector<Arc>> out;
  for (unsigned level = 1; level <= max_level; ++level) {
    const unsigned count = 1u << level;
    for (unsigned k = 0; k < count; ++k) {
      out.push_back({Arc(Turns::dyadic(2 * k + 1, level + 1),
                         std::ldexp(1.0L, -static_cast<int>(level)))});
    }
  }
  return out;
}

double check_finite_measure(const Sequence& seq) {
  double mass = 0.0;
  for (double d : seq.kernel_norms()) mass += 1.0 / d;
  return mass;
}

CheckReport finite_measure_report(const Sequence& seq, const CheckParams& params) {
  CheckReport rep;
  rep.condition_name = "finite_measure";
  rep.params = params;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double w = 1.0 / seq.kernel_norm(i);
    rep.records.push_back({i, w, 1.0, w, {}});
  }
  rep.finalize();
  const double mass = check_finite_measure(seq);
  const double tail = seq.tail_bound().value_or(0.0);
  rep.extras["mass"] = mass;
  rep.extras["tail_bound"] = tail;
  rep.pass = std::isfinite(mass + tail);
  if (!std::isfinite(tail)) {
    rep.warnings.push_back("the truncated family has a divergent tail");
  }
  return rep;
}

CheckReport check_theorem_d(const Sequence& seq, const CheckParams& params) {
  CheckReport rep;
  rep.condition_name = "theorem_d";
  rep.params = params;
  rep.warnings.push_back(
      "the condition needs gamma large enough; gamma is taken as given");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j : restricted_vicinity(seq, i, params.gamma)) {
      sum += 1.0 / seq.kernel_norm(j);
    }
    rep.records.push_back(
        {i, sum, 1.0 / seq.kernel_norm(i), sum * seq.kernel_norm(i), {}});
  }
  rep.finalize();
  return rep;
}

}  // namespace ontolab
