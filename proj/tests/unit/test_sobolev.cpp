#include <gtest/gtest.h>

#include <cmath>

#include "ontolab/errors.hpp"
#include "ontolab/generators.hpp"
#include "ontolab/sobolev.hpp"

namespace ontolab {
namespace {

Sequence deep_boxes(unsigned count, std::uint64_t seed) {
  DisjointBoxesParams p;
  p.count = count;
  p.depth_min = 1e-5;
  p.depth_max = 1e-4;
  p.eta = 0.75;
  p.seed = seed;
  return generate_disjoint_boxes(p);
}

constexpr GridResolution kCoarse{48, 64};

TEST(Sobolev, ZeroDataGivesZero) {
  const auto seq = deep_boxes(3, 1);
  const std::vector<double> data(3, 0.0);
  const auto f = assemble_sobolev_interpolant(seq, data, CheckParams{}, kCoarse);
  EXPECT_EQ(f.energy, 0.0);
  for (const auto& v : f.values) {
    for (double x : v) EXPECT_EQ(x, 0.0);
  }
}

TEST(Sobolev, UnitVectorCostsItsBlock) {
  const auto seq = deep_boxes(3, 2);
  const auto blocks = sobolev_blocks(seq, 0.75, kCoarse);
  const std::vector<double> e1{1.0, 0.0, 0.0};
  const auto f = assemble(blocks, e1);
  EXPECT_NEAR(f.energy, blocks.blocks[0].cost(), 1e-12 * f.energy);
  EXPECT_LE(f.energy, f.constant * f.data_norm_sq);
  // Equal to a_i sqrt(d(z_i)) on the cells of Delta_1(z_i).
  const auto& u = blocks.blocks[0].potential;
  for (std::size_t c = 0; c < u.values.size(); ++c) {
    if (u.plate[c] == GridPotential::kOuter) {
      EXPECT_DOUBLE_EQ(f.values[0][c], std::sqrt(seq.kernel_norm(0)));
    }
  }
}

TEST(Sobolev, BlockCostsAreOrderOne) {
  const auto blocks = sobolev_blocks(deep_boxes(4, 3), 0.75, kCoarse);
  for (const auto& b : blocks.blocks) {
    EXPECT_GT(b.cost(), 0.5);
    EXPECT_LT(b.cost(), 100.0);
    EXPECT_LT(b.mass, b.energy);
  }
}

TEST(Sobolev, LinearInData) {
  const auto seq = deep_boxes(4, 4);
  const auto blocks = sobolev_blocks(seq, 0.75, kCoarse);
  const std::vector<double> a{0.3, -1.2, 0.0, 2.5}, b{1.0, 0.4, -0.7, 0.1};
  std::vector<double> ab(4);
  for (int i = 0; i < 4; ++i) ab[i] = a[i] + b[i];
  const auto fa = assemble(blocks, a), fb = assemble(blocks, b), fab = assemble(blocks, ab);
  for (std::size_t i = 0; i < fab.values.size(); ++i) {
    for (std::size_t c = 0; c < fab.values[i].size(); ++c) {
      EXPECT_NEAR(fab.values[i][c], fa.values[i][c] + fb.values[i][c], 1e-10);
    }
  }
}

TEST(Sobolev, ShallowPointRejected) {
  const Sequence s({DiscPoint::from_polar(0.9, 0.0)});
  const std::vector<double> data{1.0};
  EXPECT_THROW(assemble_sobolev_interpolant(s, data, CheckParams{}, kCoarse, false), InputError);
}

TEST(Sobolev, CoarseGridRejected) {
  const auto seq = deep_boxes(2, 5);
  EXPECT_THROW(sobolev_blocks(seq, 0.75, {8, 8}), ResolutionError);
}

TEST(Sobolev, DataSizeMismatch) {
  const auto seq = deep_boxes(2, 6);
  const std::vector<double> data{1.0};
  EXPECT_THROW(assemble_sobolev_interpolant(seq, data, CheckParams{}, kCoarse), InputError);
}

}  // namespace
}  // namespace ontolab
