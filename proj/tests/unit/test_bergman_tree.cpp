#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ontolab/bergman_tree.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

TreeNode node(unsigned n, long long k) { return TreeNode{n, BigInt(k)}; }

TEST(TreeNode, ChildrenAndParent) {
  const TreeNode a = node(3, 5);
  EXPECT_EQ(child_plus(a), node(4, 10));
  EXPECT_EQ(child_minus(a), node(4, 9));
  EXPECT_EQ(parent(child_plus(a)), a);
  EXPECT_EQ(parent(child_minus(a)), a);
  EXPECT_EQ(parent(node(1, 2)), node(0, 1));
  EXPECT_THROW(parent(node(0, 1)), DomainError);
  EXPECT_THROW(validate(node(2, 5)), InputError);
  EXPECT_THROW(validate(node(2, 0)), InputError);
}

TEST(TreeNode, Ancestry) {
  EXPECT_TRUE(is_strict_ancestor(node(1, 1), node(3, 2)));
  EXPECT_FALSE(is_strict_ancestor(node(1, 1), node(3, 5)));
  EXPECT_FALSE(is_strict_ancestor(node(2, 3), node(2, 3)));
  const auto s = tree_structure(node(3, 6));
  ASSERT_EQ(s.path_to_root.size(), 4u);
  EXPECT_EQ(s.path_to_root.back(), node(0, 1));
  EXPECT_EQ(*s.parent, node(2, 3));
}

TEST(TreeNode, Embedding) {
  EXPECT_TRUE(embed(node(0, 1)).is_origin());
  const DiscPoint z = embed(node(2, 1));
  EXPECT_NEAR(z.radius(), 0.75, 1e-15);
  EXPECT_NEAR(z.re(), 0.0, 1e-15);
  EXPECT_NEAR(z.im(), 0.75, 1e-15);
}

TEST(TreeNode, BoxNesting) {
  // S(sigma_+ a) sits inside S(a); S(sigma_- a) inside the box over 2 I_a.
  for (unsigned n = 1; n < 12; ++n) {
    const TreeNode a = node(n, 1 + (n * 7) % (1 << n));
    const CarlesonBox sa = carleson_box(embed(a));
    EXPECT_TRUE(box_contains(sa, carleson_box(embed(child_plus(a)))));
    const CarlesonBox doubled{arc_transform(sa.base, 1.0, 2.0), sa.depth};
    EXPECT_TRUE(box_contains(doubled, carleson_box(embed(child_minus(a)))));
  }
}

TEST(TreeCapacity, SinglePath) {
  for (unsigned d = 1; d <= 9; ++d) {
    const TreeCondenser c{node(2, 3), {TreeNode{2 + d, BigInt(3) << d}}};
    EXPECT_NEAR(tree_capacity_exact(c), 1.0 / d, 1e-14);
    EXPECT_NEAR(tree_capacity_recursive(c), 1.0 / d, 1e-15);
    EXPECT_EQ(tree_capacity_rational(c), Rational(1, d));
  }
}

TEST(TreeCapacity, TwoTargets) {
  // Both children of a node one edge below the source: 1 / (1 + 1/2).
  const TreeCondenser c{node(0, 1), {node(2, 1), node(2, 2)}};
  EXPECT_NEAR(tree_capacity_exact(c), 2.0 / 3, 1e-14);
  EXPECT_EQ(tree_capacity_rational(c), Rational(2, 3));
  EXPECT_EQ(path_union_size(c), 4u);
}

TEST(TreeCapacity, RedundantTargetsIgnored) {
  const TreeCondenser a{node(0, 1), {node(2, 1)}};
  const TreeCondenser b{node(0, 1), {node(2, 1), node(4, 1)}};
  EXPECT_NEAR(tree_capacity_recursive(a), tree_capacity_recursive(b), 1e-15);
  EXPECT_NEAR(tree_capacity_exact(b), 0.5, 1e-14);
}

TEST(TreeCapacity, RejectsTargetsOutsideSubtree) {
  const TreeCondenser c{node(1, 1), {node(2, 4)}};
  EXPECT_THROW(tree_capacity_exact(c), InputError);
  EXPECT_THROW(tree_capacity_recursive(c), InputError);
  const TreeCondenser self{node(1, 1), {node(1, 1)}};
  EXPECT_THROW(tree_capacity_recursive(self), InputError);
}

TEST(TreeCapacity, RandomRecursionMatchesSolver) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const TreeNode src = node(3, 1 + trial % 8);
    TreeCondenser c{src, {}};
    const int targets = 1 + trial % 9;
    for (int t = 0; t < targets; ++t) {
      const unsigned depth = 1 + rng() % 12;
      TreeNode x{src.level + depth, (src.index - 1) << depth};
      x.index += 1 + BigInt(rng() % (1u << depth));
      c.targets.push_back(x);
    }
    EXPECT_NEAR(tree_capacity_recursive(c), tree_capacity_exact(c), 1e-12);
    EXPECT_NEAR(tree_capacity_rational(c).convert_to<double>(), tree_capacity_recursive(c), 1e-14);
  }
}

TEST(Comb, StructureAndFourLevelValue) {
  const CombSpec spec{node(4, 3)};
  EXPECT_EQ(spec.teeth(), 2u);
  const auto spine = comb_spine(spec);
  ASSERT_EQ(spine.size(), 3u);
  EXPECT_EQ(spine[1], node(5, 6));
  EXPECT_EQ(spine[2], node(6, 12));
  const auto teeth = comb_teeth(spec);
  ASSERT_EQ(teeth.size(), 2u);
  EXPECT_EQ(teeth[0], (TreeNode{9, BigInt((6 - 1) * 16 + 1)}));
  EXPECT_EQ(tree_capacity_rational(comb_condenser(spec)), Rational(9, 29));
  EXPECT_THROW(CombSpec{node(5, 1)}.teeth(), DomainError);
}

TEST(Comb, OracleValues) {
  EXPECT_NEAR(comb_capacity_transfer(4), 9.0 / 29, 1e-15);
  EXPECT_NEAR(comb_capacity_closed_form(4), 9.0 / 29, 1e-14);
  EXPECT_NEAR(comb_capacity_transfer(16), 0.17239630960895979, 1e-15);
  EXPECT_NEAR(comb_capacity_transfer(100), 0.073261283549546307, 1e-15);
  EXPECT_NEAR(comb_capacity_closed_form(3600), 0.012612669703272660, 1e-14);
  const auto d = comb_diagonalization(4);
  EXPECT_NEAR(static_cast<double>(d.delta1), 0.39038820320220757, 1e-15);
  EXPECT_NEAR(static_cast<double>(d.delta2), -0.64038820320220757, 1e-15);
  EXPECT_NEAR(static_cast<double>(d.q), 0.13810628730978847, 1e-15);
  EXPECT_THROW(comb_capacity_closed_form(50), DomainError);
}

TEST(Comb, LimitOfScaledCapacity) {
  const double limit = (std::exp(2.0) - 1) / (std::exp(2.0) + 1);
  double prev = 0;
  for (unsigned m = 2; m <= 60; ++m) {
    const double scaled = comb_capacity_closed_form(m * m) * m;
    EXPECT_GT(scaled, prev);
    EXPECT_LT(scaled, limit);
    prev = scaled;
  }
  EXPECT_NEAR(prev, limit, 0.02);
}

TEST(Comb, ExactSolverAgreesOnSmallCombs) {
  for (unsigned m = 2; m <= 6; ++m) {
    const CombSpec spec{node_near(m * m, 0.3L)};
    EXPECT_NEAR(tree_capacity_exact(comb_condenser(spec)), comb_capacity_transfer(m * m), 1e-12);
  }
}

TEST(Comb, LowerBoundCheck) {
  const CheckReport rep = comb_lower_bound_check(16, 400);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.records.size(), 17u);
  EXPECT_GT(rep.extras.at("min_c0_sqrtN"), 0.1);
  EXPECT_THROW(comb_lower_bound_check(4, 400), InputError);
}

TEST(TreeDistance, LemmaBounds) {
  const CheckReport rep = tree_disc_distance_check(60);
  EXPECT_TRUE(rep.pass);
  EXPECT_LE(rep.sup_ratio, 1.0);
  EXPECT_THROW(tree_disc_distance_check(61), InputError);
}

TEST(NodeNear, PicksClosestIndex) {
  EXPECT_EQ(node_near(3, 0.25L), node(3, 2));
  EXPECT_EQ(node_near(3, 0.0L), node(3, 8));
  const TreeNode deep = node_near(400, 1.0L / 3);
  const long double err = Turns::from_fraction(1.0L / 3).signed_difference(embed(deep).angle());
  EXPECT_LE(std::fabs(err), std::ldexp(1.0L, -400));
}

}  // namespace
}  // namespace ontolab
