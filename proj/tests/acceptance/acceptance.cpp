#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/capacity.hpp"
#include "ontolab/checkers.hpp"
#include "ontolab/disc_geometry.hpp"
#include "ontolab/equilibrium.hpp"
#include "ontolab/generators.hpp"
#include "ontolab/grid_condenser.hpp"
#include "ontolab/numerics.hpp"
#include "ontolab/scenario.hpp"
#include "ontolab/sobolev.hpp"

using namespace ontolab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  ///< seconds; <= 0 for none
  std::function<void(Outcome&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- tree arithmetic -------------------------------------------------------

void comb_limit(Outcome& o) {
  std::vector<double> scaled;
  for (unsigned m = 2; m <= 60; ++m) {
    const CombSpec spec{node_near(m * m, 0.0L)};
    const double c0 = tree_capacity_recursive(comb_condenser(spec));
    scaled.push_back(c0 * m);
  }
  const double c4 = scaled[0] / 2;
  const double tanh1 = std::tanh(1.0);
  o.require(std::abs(c4 - 9.0 / 29.0) <= 1e-9, "N=4 equals 9/29");
  o.require(std::abs(c4 - 0.310346) <= 1e-5, "N=4 near 0.310346");
  o.require(std::abs(scaled[8] - 0.73260) <= 1e-3, "N=100");
  o.require(std::abs(scaled[58] - 0.75679) <= 1e-3, "N=3600");
  o.require(std::abs(scaled[58] - tanh1) <= 0.02, "limit gap");
  o.require(std::is_sorted(scaled.begin(), scaled.end(), std::less_equal<>()) &&
                std::adjacent_find(scaled.begin(), scaled.end()) == scaled.end(),
            "strictly increasing");
  std::printf("  c0(4) = %.9f, c0*sqrtN: N=100 %.6f, N=3600 %.6f, limit gap %.5f\n", c4,
              scaled[8], scaled[58], tanh1 - scaled[58]);
}

void comb_bound(Outcome& o) {
  const auto rep = comb_lower_bound_check(16, 3600);
  double min_lhs = INFINITY;
  unsigned witness = 0;
  for (const auto& r : rep.records) {
    if (r.lhs < min_lhs) {
      min_lhs = r.lhs;
      witness = static_cast<unsigned>(r.index);
    }
  }
  o.require(rep.pass, "c0 sqrt(N) >= 0.1 for all N");
  o.require(rep.records.size() == 57, "57 perfect squares in [16, 3600]");
  std::printf("  min c0*sqrtN = %.6f at record %u (threshold 0.1)\n", min_lhs, witness);
}

TreeNode random_descendant(const TreeNode& a, unsigned extra, PortableRng& rng) {
  TreeNode n = a;
  for (unsigned i = 0; i < extra; ++i) n = rng.below(2) ? child_plus(n) : child_minus(n);
  return n;
}

void recursion_vs_exact(Outcome& o) {
  PortableRng rng(20240601);
  double worst = 0;
  std::size_t largest = 0;
  int made = 0;
  while (made < 200) {
    TreeCondenser c;
    c.source = random_descendant(TreeNode{}, static_cast<unsigned>(rng.below(12)), rng);
    const auto targets = 1 + rng.below(24);
    for (std::uint64_t t = 0; t < targets; ++t) {
      c.targets.push_back(
          random_descendant(c.source, 1 + static_cast<unsigned>(rng.below(40)), rng));
    }
    const std::size_t size = path_union_size(c);
    if (size > 500) continue;
    ++made;
    largest = std::max(largest, size);
    const double exact = tree_capacity_exact(c);
    const double rec = tree_capacity_recursive(c);
    worst = std::max(worst, std::abs(exact - rec));
  }
  double comb_worst = 0;
  for (unsigned m = 2; m <= 60; ++m) {
    const auto c = comb_condenser(CombSpec{node_near(m * m, 0.3L)});
    comb_worst = std::max(comb_worst,
                          std::abs(tree_capacity_exact(c) - tree_capacity_recursive(c)));
  }
  o.require(worst <= 1e-10, "random condensers");
  o.require(comb_worst <= 1e-10, "combs");
  std::printf("  random: max |diff| = %.3e (largest path union %zu); combs: %.3e\n", worst,
              largest, comb_worst);
}

void closed_form(Outcome& o) {
  double worst = 0;
  for (unsigned m = 2; m <= 60; ++m) {
    const unsigned n = m * m;
    const double cf = comb_capacity_closed_form(n);
    const double rec = tree_capacity_recursive(comb_condenser(CombSpec{node_near(n, 0.7L)}));
    worst = std::max({worst, std::abs(cf - rec), std::abs(cf - comb_capacity_transfer(n))});
  }
  o.require(worst <= 1e-10, "closed form");
  std::printf("  max |closed form - recursion| = %.3e\n", worst);
}

void tree_distance(Outcome& o) {
  const auto rep = tree_disc_distance_check(60);
  o.require(rep.pass, "distance bounds");
  std::printf("  %zu nodes checked, sup ratio %.6f\n", rep.records.size(), rep.sup_ratio);
}

// --- disc potential theory -------------------------------------------------

void harmonic(Outcome& o) {
  PortableRng rng(11);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.0, 0.99);
    const double theta = rng.uniform(0.0, 2 * std::numbers::pi);
    const DiscPoint z = DiscPoint::from_polar(r, theta);
    const Arc arc = Arc::from_radians(rng.uniform(0.0, 2 * std::numbers::pi),
                                      rng.uniform(0.01, 0.99));
    const double a = arc.center_angle() - std::numbers::pi * static_cast<double>(arc.length());
    const double b = a + 2 * std::numbers::pi * static_cast<double>(arc.length());
    const double r2 = r * r;
    const auto poisson = [&](double t) {
      return (1 - r2) / (1 - 2 * r * std::cos(t - theta) + r2) / (2 * std::numbers::pi);
    };
    // Split at the peak of the Poisson kernel when it lies inside the arc.
    const double peak = theta + 2 * std::numbers::pi * std::ceil((a - theta) / (2 * std::numbers::pi));
    double quad = 0;
    if (peak < b) {
      quad = numerics::adaptive_integrate(poisson, a, peak, 1e-12) +
             numerics::adaptive_integrate(poisson, peak, b, 1e-12);
    } else {
      quad = numerics::adaptive_integrate(poisson, a, b, 1e-12);
    }
    worst = std::max(worst, std::abs(quad - harmonic_measure(z, arc)));
  }
  double origin = 0;
  for (int i = 0; i < 50; ++i) {
    const Arc arc = Arc::from_radians(rng.uniform(0.0, 6.0), rng.uniform(1e-6, 1.0));
    origin = std::max(origin, std::abs(harmonic_measure(DiscPoint(), arc) -
                                       static_cast<double>(arc.length())));
  }
  double total = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<std::uint64_t> cuts{0, 4096};
    for (int k = 0; k < 6; ++k) cuts.push_back(1 + rng.below(4095));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Arc> parts;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const long double lo = cuts[k] / 4096.0L;
      const long double hi = cuts[k + 1] / 4096.0L;
      parts.emplace_back(Turns::from_fraction((lo + hi) / 2), hi - lo);
    }
    const DiscPoint z = DiscPoint::from_polar(rng.uniform(0.0, 0.999), rng.uniform(0.0, 6.0));
    double sum = 0;
    for (const auto& p : parts) sum += harmonic_measure(z, p);
    total = std::max(total, std::abs(sum - 1));
  }
  o.require(worst <= 1e-8, "closed form vs quadrature");
  o.require(origin <= 1e-12, "omega(0, I) = |I|");
  o.require(total <= 1e-12, "total mass 1");
  std::printf("  vs quadrature %.3e, at origin %.3e, partitions %.3e\n", worst, origin, total);
}

void comparability(Outcome& o) {
  PortableRng rng(5);
  const GridResolution res{128, 256};
  double max_ratio = 1;
  int made = 0;
  int attempts = 0;
  while (made < 50 && attempts < 100000) {
    ++attempts;
    const DiscPoint z =
        DiscPoint::from_polar(rng.uniform(0.3, 0.6), rng.uniform(0.0, 2 * std::numbers::pi));
    const HyperbolicDisc inner{z, 1.0};
    const auto count = 1 + rng.below(3);
    std::vector<DiscPoint> ws;
    bool ok = true;
    for (std::uint64_t k = 0; k < count && ok; ++k) {
      // Disjoint unit discs need d(z, w) > 2, which forces deep targets.
      const double depth = rng.uniform(0.02, 0.06);
      const DiscPoint w =
          DiscPoint::from_polar(1 - depth, rng.uniform(0.0, 2 * std::numbers::pi));
      ok = 1 - w.radius() <= (1 - z.radius()) / 2 + 1e-15 &&
           hyperbolic_distance(z, w) > 2.05 && !disc_intersects_box(inner, carleson_box(w));
      for (const auto& v : ws) ok = ok && !boxes_intersect(carleson_box(v), carleson_box(w));
      ws.push_back(w);
    }
    if (!ok) continue;
    std::vector<CarlesonBox> boxes;
    std::vector<HyperbolicDisc> discs;
    std::vector<Arc> arcs;
    for (const auto& w : ws) {
      boxes.push_back(carleson_box(w));
      discs.push_back(HyperbolicDisc{w, 1.0});
      arcs.push_back(boundary_arc(w));
    }
    const double cs = grid_condenser_capacity({inner, boxes}, res).energy;
    const double cd = grid_condenser_capacity({inner, discs}, res).energy;
    const double ca = grid_condenser_capacity({inner, arcs}, res).energy;
    for (double r : {cs / cd, cs / ca, cd / ca}) max_ratio = std::max({max_ratio, r, 1 / r});
    ++made;
  }
  o.require(made == 50, "50 configurations");
  o.require(max_ratio <= 64, "ratios within [1/64, 64]");
  std::printf("  %d configurations (%d draws), max pairwise ratio %.4f\n", made, attempts,
              max_ratio);
}

void annulus(Outcome& o) {
  const double exact = full_circle_capacity();
  const CondenserSpec spec{HyperbolicDisc{DiscPoint(), 1.0},
                           std::vector<Arc>{Arc::full_circle()}};
  std::vector<double> errors;
  for (int r : {16, 32, 64, 128}) {
    const double e = grid_condenser_capacity(spec, {r, 2 * r}).energy / exact - 1;
    errors.push_back(std::abs(e));
    std::printf("  %4dx%-4d relative error %+.3e\n", r, 2 * r, e);
  }
  o.require(*std::max_element(errors.begin(), errors.end()) <= 0.15, "within 15%");
  o.require(errors[1] < errors[0], "improves under one refinement");
  double envelope = errors[0];
  for (std::size_t k = 1; k < errors.size(); ++k) {
    o.require(errors[k] < envelope, "error envelope decreases");
    envelope = std::max(envelope, errors[k]);
  }
}

void half_plane(Outcome& o) {
  PortableRng rng(3);
  double worst = 1;
  std::size_t nodes = 0;
  for (int i = 0; i < 10; ++i) {
    const double dist = rng.uniform(2.05, 2.6);
    const DiscPoint w =
        DiscPoint::from_polar(std::tanh(dist), rng.uniform(0.0, 2 * std::numbers::pi));
    const CondenserSpec spec{HyperbolicDisc{DiscPoint(), 1.0},
                             std::vector<HyperbolicDisc>{HyperbolicDisc{w, 1.0}}};
    const auto u = grid_condenser_capacity(spec, {128, 512});
    for (int a = 0; a < u.radial(); ++a) {
      for (int b = 0; b < u.angular(); ++b) {
        const DiscPoint p = DiscPoint::from_polar(u.grid.r_center(a), u.grid.theta_center(b));
        if (hyperbolic_distance(p, w) < hyperbolic_distance(p, DiscPoint())) {
          worst = std::min(worst, u.values[u.grid.index(a, b)]);
          ++nodes;
        }
      }
    }
  }
  o.require(worst >= 0.45, "potential >= 0.45");
  std::printf("  %zu nodes nearer to w, min potential %.4f\n", nodes, worst);
}

// --- sequences -------------------------------------------------------------

void cc_soundness(Outcome& o) {
  for (std::uint64_t seed : {1, 2, 3}) {
    DisjointBoxesParams p;
    p.count = 25;
    p.eta = 0.75;
    p.seed = seed;
    const auto rep = check_capacitary_condition(generate_disjoint_boxes(p), CheckParams{}, 16);
    o.require(rep.sup_ratio == 0.0, "disjoint boxes give 0");
  }
  std::vector<double> ratios;
  for (unsigned m : {4u, 6u, 8u, 10u}) {
    ratios.push_back(check_capacitary_condition(generate_comb(m, 0.2L), CheckParams{}, 16)
                         .sup_ratio);
  }
  for (std::size_t k = 1; k < ratios.size(); ++k) {
    o.require(ratios[k] > ratios[k - 1], "comb ratios increase");
  }
  std::printf("  comb CC ratios m=4,6,8,10: %.4f %.4f %.4f %.4f\n", ratios[0], ratios[1],
              ratios[2], ratios[3]);
}

void scenario(Outcome& o) {
  const auto rep = counterexample_scenario(ScenarioParams{});
  o.require(rep.ws_pass && rep.ws_min > 0, "weakly separated");
  o.require(rep.combs.size() == 3, "three combs");
  for (const auto& c : rep.combs) {
    o.require(c.mass_pass && c.mass_ratio <= 64, "comb mass bound");
    o.require(c.tree_pass && c.tree_ratio >= c.tree_threshold, "tree ratio");
    std::printf("  m=%2u mass*sqrt(d) %.4f  cap*level %.4f >= %.4f\n", c.m, c.mass_ratio,
                c.tree_ratio, c.tree_threshold);
  }
  o.require(rep.pass, "scenario passes");
  std::printf("  %zu points, min d_D %.4e\n", rep.sequence.size(), rep.ws_min);
}

void sobolev(Outcome& o) {
  DisjointBoxesParams p;
  p.count = 20;
  p.depth_min = 1e-5;
  p.depth_max = 1e-4;
  p.eta = 0.75;
  p.seed = 42;
  const auto seq = generate_disjoint_boxes(p);
  CheckParams params;
  params.eta = 0.75;
  o.require(check_capacitary_condition(seq, params, 16).pass, "sequence passes CC");

  PortableRng rng(9);
  std::vector<std::vector<double>> data;
  for (int v = 0; v < 10; ++v) {
    std::vector<double> a(seq.size());
    double norm = 0;
    for (auto& x : a) {
      x = rng.uniform(-1.0, 1.0);
      norm += x * x;
    }
    for (auto& x : a) x /= std::sqrt(norm);
    data.push_back(std::move(a));
  }
  // Preconditions (weak separation, capacitary condition) verified once.
  assemble_sobolev_interpolant(seq, data[0], params, {128, 256});

  std::vector<double> constants;
  for (const GridResolution res : {GridResolution{128, 256}, GridResolution{256, 512}}) {
    const auto blocks = sobolev_blocks(seq, params.gamma, res);
    double worst = 0;
    for (const auto& a : data) {
      const auto f = assemble(blocks, a);
      o.require(f.constant == blocks.constant, "same constant for all data");
      // Energy and bound are sums of the same nonnegative terms; allow the
      // rounding of those sums only.
      o.require(f.energy <= f.constant * f.data_norm_sq * (1 + 1e-12), "energy bound");
      worst = std::max(worst, f.energy / f.data_norm_sq);
    }
    constants.push_back(blocks.constant);
    std::printf("  %dx%d: C = %.4f, max energy / |a|^2 = %.4f\n", res.radial, res.angular,
                blocks.constant, worst);
  }
  const double ratio = constants[1] / constants[0];
  o.require(ratio <= 2 && ratio >= 0.5, "C stable within 2x under refinement");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "comb limit sweep m = 2..60", 1.0, comb_limit},
      {2, "comb lower bound c0 >= 1/(10 sqrt N), N in [16, 3600]", 1.0, comb_bound},
      {3, "recursive fold equals exact tree solver", 10.0, recursion_vs_exact},
      {4, "comb closed form equals recursion", 0.0, closed_form},
      {5, "tree/disc distance comparison, n = 1..60", 0.0, tree_distance},
      {6, "harmonic measure closed form", 0.0, harmonic},
      {7, "box / disc / arc condensers comparable", 300.0, comparability},
      {8, "annulus benchmark", 0.0, annulus},
      {9, "equilibrium potential half-plane bound", 0.0, half_plane},
      {10, "capacitary checker soundness", 0.0, cc_soundness},
      {11, "lattice + combs counterexample scenario", 60.0, scenario},
      {12, "Sobolev interpolant energy bound", 0.0, sobolev},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double elapsed = seconds_since(t0);
    if (c.time_limit > 0 && elapsed >= c.time_limit) {
      o.pass = false;
      o.detail << " [over time limit " << c.time_limit << " s]";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                elapsed, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
