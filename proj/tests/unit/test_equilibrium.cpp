#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ontolab/equilibrium.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Equilibrium, SingleArcRobinConstant) {
  for (double len : {0.01, 0.1, 0.3, 0.6, 0.9}) {
    const std::vector<Arc> arcs{Arc(Turns::from_fraction(0.2L), len)};
    const auto mu = equilibrium_measure(arcs, 16);
    EXPECT_NEAR(mu.energy, std::log(2 / std::sin(kPi * len / 2)), 1e-9) << len;
  }
}

TEST(Equilibrium, AntipodalPairBySquaring) {
  // z -> z^2 maps the pair onto one arc of twice the length, so the
  // logarithmic capacity is sqrt(sin(pi len)).
  for (double len : {0.05, 0.2, 0.4}) {
    const std::vector<Arc> arcs{Arc(Turns(), len), Arc(Turns::dyadic(1, 1), len)};
    const auto mu = equilibrium_measure(arcs, 24);
    EXPECT_NEAR(mu.energy, std::log(2.0) - 0.5 * std::log(std::sin(kPi * len)), 1e-8) << len;
    EXPECT_NEAR(mu.arc_mass(0), 0.5, 1e-10);
  }
}

TEST(Equilibrium, WeightsFormProbabilityMeasure) {
  const std::vector<Arc> arcs{Arc(Turns(), 0.1L), Arc(Turns::from_fraction(0.3L), 0.02L),
                              Arc(Turns::from_fraction(0.7L), 0.2L)};
  const auto mu = equilibrium_measure(arcs, 16);
  double s = 0;
  for (double w : mu.weights) {
    EXPECT_GE(w, 0.0);
    s += w;
  }
  EXPECT_NEAR(s, 1.0, 1e-12);
  EXPECT_EQ(mu.nodes.size(), mu.weights.size());
  EXPECT_GT(mu.arc_mass(2), mu.arc_mass(1));
}

TEST(Equilibrium, PotentialConstantOnSupport) {
  const std::vector<Arc> arcs{Arc(Turns(), 0.1L), Arc(Turns::from_fraction(0.4L), 0.15L)};
  const auto mu = equilibrium_measure(arcs, 24);
  for (double x : {-0.9, -0.3, 0.0, 0.5, 0.95}) {
    for (const auto& a : arcs) {
      const double angle = a.center_angle() + x * kPi * static_cast<double>(a.length());
      EXPECT_NEAR(mu.potential(angle), mu.energy, 1e-4) << x;
    }
  }
  // Strictly smaller off the support.
  EXPECT_LT(mu.potential(kPi), mu.energy);
}

TEST(Equilibrium, Errors) {
  const std::vector<Arc> overlap{Arc(Turns(), 0.2L), Arc(Turns::from_fraction(0.05L), 0.2L)};
  EXPECT_THROW(equilibrium_measure(overlap, 16), InputError);
  const std::vector<Arc> one{Arc(Turns(), 0.2L)};
  EXPECT_THROW(equilibrium_measure(one, 4), InputError);
  const std::vector<Arc> full{Arc::full_circle()};
  EXPECT_THROW(equilibrium_measure(full, 16), InputError);
}

TEST(LogCapacity, TrivialCases) {
  EXPECT_EQ(log_capacity({}, 16), 0.0);
  const std::vector<Arc> full{Arc::full_circle()};
  EXPECT_DOUBLE_EQ(log_capacity(full, 16), 2 * kPi / -std::log(std::tanh(1.0)));
  EXPECT_DOUBLE_EQ(full_circle_capacity(), 2 * kPi / -std::log(std::tanh(1.0)));
}

TEST(LogCapacity, NearlyFullCircleApproachesAnnulus) {
  const std::vector<Arc> arcs{Arc(Turns(), 1 - 1e-7L)};
  EXPECT_NEAR(log_capacity(arcs, 32) / full_circle_capacity(), 1.0, 1e-3);
}

TEST(LogCapacity, MonotoneAndSubadditive) {
  const Arc a(Turns(), 0.05L), b(Turns::from_fraction(0.5L), 0.05L);
  const Arc big(Turns(), 0.1L);
  const std::vector<Arc> sa{a}, sb{b}, sab{a, b}, sbig{big};
  const double ca = log_capacity(sa, 16), cb = log_capacity(sb, 16);
  const double cab = log_capacity(sab, 16);
  EXPECT_NEAR(ca, cb, 1e-12);  // rotation invariance
  EXPECT_LT(ca, log_capacity(sbig, 16));
  EXPECT_GT(cab, ca);
  EXPECT_LE(cab, ca + cb + 1e-12);
}

TEST(LogCapacity, MergesOverlappingArcs) {
  const std::vector<Arc> split{Arc(Turns(), 0.1L), Arc(Turns::from_fraction(0.05L), 0.1L)};
  const std::vector<Arc> joined{Arc(Turns::from_fraction(0.025L), 0.15L)};
  EXPECT_NEAR(log_capacity(split, 16), log_capacity(joined, 16), 1e-12);
}

TEST(LogCapacity, ConvergesInModes) {
  const std::vector<Arc> arcs{Arc(Turns(), 0.1L), Arc(Turns::from_fraction(0.3L), 0.01L),
                              Arc(Turns::from_fraction(0.6L), 0.3L)};
  const double c16 = log_capacity(arcs, 16);
  const double c48 = log_capacity(arcs, 48);
  EXPECT_NEAR(c16, c48, 1e-8 * c48);
}

TEST(LogCapacity, TinyArcsBehaveLogarithmically) {
  // C(I) ~ pi / (log(4 / (pi |I|)) + const) for small I.
  const std::vector<Arc> a{Arc(Turns(), 1e-6L)}, b{Arc(Turns(), 1e-12L)};
  const double ea = kPi / log_capacity(a, 16);
  const double eb = kPi / log_capacity(b, 16);
  EXPECT_NEAR(eb - ea, 6 * std::log(10.0), 1e-6);
  // Far below double resolution of the arc's position.
  const std::vector<Arc> c{Arc(Turns::from_fraction(0.37L), 1e-21L)};
  EXPECT_NEAR(kPi / log_capacity(c, 16) - ea, 15 * std::log(10.0), 1e-6);
}

}  // namespace
}  // namespace ontolab
