#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ontolab/capacity.hpp"
#include "ontolab/equilibrium.hpp"
#include "ontolab/errors.hpp"

namespace ontolab {
namespace {

TEST(CondenserCapacity, OriginIsLogCapacity) {
  const std::vector<Arc> arcs{Arc(Turns(), 0.1L), Arc(Turns::from_fraction(0.4L), 0.05L)};
  const auto c = condenser_capacity(DiscPoint(), arcs, 16);
  EXPECT_NEAR(c.value, log_capacity(arcs, 16), 1e-13);
  EXPECT_FALSE(c.plates_intersect);
}

TEST(CondenserCapacity, ConformalInvariance) {
  // Moving the source toward an arc increases its capacity; the value equals
  // C of the image arcs.
  const DiscPoint z = DiscPoint::from_polar(0.8, 0.0);
  const std::vector<Arc> arcs{Arc(Turns(), 0.02L)};
  const auto c = condenser_capacity(z, arcs, 16);
  ASSERT_EQ(c.image_arcs.size(), 1u);
  EXPECT_NEAR(static_cast<double>(c.image_arcs[0].length()), harmonic_measure(z, arcs[0]), 1e-14);
  EXPECT_NEAR(c.value, log_capacity(c.image_arcs, 16), 1e-13);
  EXPECT_GT(c.value, log_capacity(arcs, 16));
}

TEST(CondenserCapacity, RotationInvariance) {
  const DiscPoint z = DiscPoint::from_polar(0.7, 0.4);
  const DiscPoint zr = DiscPoint::from_polar(0.7, 0.4 + 1.3);
  const std::vector<Arc> arcs{Arc::from_radians(1.0, 0.05), Arc::from_radians(2.5, 0.1)};
  const std::vector<Arc> rot{Arc::from_radians(2.3, 0.05), Arc::from_radians(3.8, 0.1)};
  EXPECT_NEAR(condenser_capacity(z, arcs, 16).value, condenser_capacity(zr, rot, 16).value,
              1e-10);
}

TEST(CondenserCapacity, BoxTargetsUseImageArcs) {
  const DiscPoint z = DiscPoint::from_polar(0.5, 0.0);
  const DiscPoint w = DiscPoint::from_polar(0.95, 0.3);
  const std::vector<CarlesonBox> boxes{carleson_box(w)};
  const auto c = condenser_capacity(z, boxes, 16);
  const std::vector<Arc> image{boundary_arc(mobius(z, w))};
  EXPECT_NEAR(c.value, log_capacity(image, 16), 1e-13);
  EXPECT_FALSE(c.comparability_warning);
  const std::vector<CarlesonBox> shallow{carleson_box(DiscPoint::from_polar(0.6, 3.14))};
  EXPECT_TRUE(condenser_capacity(z, shallow, 16).comparability_warning);
}

TEST(CondenserCapacity, IntersectingPlatesGiveZero) {
  const DiscPoint z = DiscPoint::from_polar(0.9, 0.0);
  const std::vector<HyperbolicDisc> discs{HyperbolicDisc{DiscPoint::from_polar(0.92, 0.0), 1.0}};
  const auto c = condenser_capacity(z, discs, 16);
  EXPECT_TRUE(c.plates_intersect);
  EXPECT_EQ(c.value, 0.0);
  EXPECT_FALSE(c.note.empty());
}

TEST(CondenserCapacity, EmptyTargets) {
  EXPECT_EQ(condenser_capacity(DiscPoint(), std::vector<Arc>{}, 16).value, 0.0);
}

TEST(PlatePoint, BoxAndDisc) {
  const DiscPoint w = DiscPoint::from_polar(0.9, 1.0);
  const DiscPoint p = plate_point(carleson_box(w));
  EXPECT_NEAR(p.radius(), 0.9, 1e-15);
  EXPECT_NEAR(p.theta(), 1.0, 1e-15);
  EXPECT_EQ(plate_point(HyperbolicDisc{w, 1.0}), w);
}

}  // namespace
}  // namespace ontolab
