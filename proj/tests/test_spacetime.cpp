#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "ttflow/error.hpp"
#include "ttflow/spacetime.hpp"

using namespace ttflow;
using ttflow::testing::make_rng;

namespace {

void expect_point_near(const SpacetimePoint& a, const SpacetimePoint& b, double tol) {
  EXPECT_NEAR(a.x0, b.x0, tol);
  EXPECT_NEAR(a.x1, b.x1, tol);
  EXPECT_NEAR(a.x2, b.x2, tol);
  EXPECT_NEAR(a.x3, b.x3, tol);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ttflow::Error";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(MinkowskiSquare, Examples) {
  EXPECT_EQ(minkowski_square({0, 0, 0, 0}), 0.0);
  EXPECT_EQ(minkowski_square({1, 2, 0, 0}), -3.0);
  EXPECT_EQ(minkowski_square({2, 1, 0, 0}), 3.0);
  EXPECT_EQ(minkowski_square({1, 1, 1, 1}), -2.0);
}

TEST(NullCoords, Examples) {
  const NullRadialCoords a = to_null({0, 0.5, 0, 0}, 0.0);
  EXPECT_DOUBLE_EQ(a.z_plus(), 0.5);
  EXPECT_DOUBLE_EQ(a.z_minus(), -0.5);

  const double L1 = 1.7;
  const NullRadialCoords b = to_null({0.3, L1, 0, 0}, L1);
  EXPECT_DOUBLE_EQ(b.z_plus(), 0.3);
  EXPECT_DOUBLE_EQ(b.z_minus(), 0.3);
}

TEST(NullCoords, RejectsBadOrderingAndDirection) {
  EXPECT_EQ(kind_of([] { NullRadialCoords(-1.0, 1.0); }), ErrorKind::InvalidOrdering);
  EXPECT_EQ(kind_of([] { NullRadialCoords(1.0, 0.0, {1.0, 1.0, 0.0}); }), ErrorKind::InvalidArgument);
}

TEST(NullCoords, RoundTrip) {
  auto rng = make_rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const double center = u(rng);
    const SpacetimePoint x{u(rng), u(rng), i % 2 ? 0.0 : u(rng), i % 3 ? 0.0 : u(rng)};
    expect_point_near(from_null(to_null(x, center), center), x, 1e-12 * 10.0);
  }
  for (int i = 0; i < 1000; ++i) {
    const SpacetimePoint x{u(rng), u(rng), 0.0, 0.0};
    expect_point_near(from_null(to_null(x, 0.0), 0.0), x, 1e-12);
  }
}

TEST(NullCoords, PlanarRoundTripKeepsSign) {
  const NullRadialCoords left = from_planar({-0.2, 0.6});
  EXPECT_DOUBLE_EQ(left.radius(), 0.4);
  EXPECT_DOUBLE_EQ(left.direction().x, -1.0);
  const NullPair back = to_planar(left);
  EXPECT_DOUBLE_EQ(back.plus, -0.2);
  EXPECT_DOUBLE_EQ(back.minus, 0.6);
  EXPECT_EQ(kind_of([] { to_planar(NullRadialCoords(1.0, 0.0, {0.0, 1.0, 0.0})); }),
            ErrorKind::InvalidArgument);
}

TEST(InWedge, Examples) {
  EXPECT_TRUE(in_wedge({0, 1, 0, 0}, {0.0}));
  EXPECT_FALSE(in_wedge({2, 1, 0, 0}, {0.0}));
  EXPECT_FALSE(in_wedge({0, 1, 0, 0}, {1.0}));
  EXPECT_FALSE(in_wedge({1, 1, 0, 0}, {0.0}));
  EXPECT_FALSE(in_wedge({NAN, 1, 0, 0}, {0.0}));
}

TEST(InDiamond, Examples) {
  EXPECT_TRUE(in_diamond({0, 0, 0, 0}, {1.0, 0.0}));
  EXPECT_FALSE(in_diamond({0, 1, 0, 0}, {1.0, 0.0}));
  for (const double L : {1e-3, 1.0, 42.0}) {
    EXPECT_TRUE(in_diamond({0, 3.5, 0, 0}, {L, 3.5}));
  }
  EXPECT_FALSE(in_diamond({0.5, 0, 0.6, 0}, {1.0, 0.0}));
  EXPECT_TRUE(in_diamond({0.5, 0, 0.4, 0}, {1.0, 0.0}));
}

TEST(RayInversion, Examples) {
  expect_point_near(ray_inversion({0, 1, 0, 0}), {0, 1, 0, 0}, 1e-15);
  expect_point_near(ray_inversion({1, 2, 0, 0}), {1.0 / 3.0, 2.0 / 3.0, 0, 0}, 1e-15);
  expect_point_near(ray_inversion(ray_inversion({1, 2, 0, 0})), {1, 2, 0, 0}, 1e-14);
}

TEST(RayInversion, LightlikeInputIsRejected) {
  EXPECT_EQ(kind_of([] { ray_inversion({1, 1, 0, 0}); }), ErrorKind::LightlikeInput);
  EXPECT_EQ(kind_of([] { ray_inversion({0, 0, 0, 0}); }), ErrorKind::LightlikeInput);
  // Relative tolerance: a large almost-null vector is still lightlike.
  EXPECT_EQ(kind_of([] { ray_inversion({1e6, 1e6 + 1e-7, 0, 0}); }), ErrorKind::LightlikeInput);
}

TEST(RayInversion, IsAnInvolution) {
  auto rng = make_rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  while (checked < 2000) {
    const SpacetimePoint x{u(rng), u(rng), u(rng), u(rng)};
    const double e2 = x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    if (std::abs(minkowski_square(x)) < 0.05 * e2) continue;
    const SpacetimePoint back = ray_inversion(ray_inversion(x));
    EXPECT_LE(ttflow::testing::max_abs_diff(back, x), 1e-10 * ttflow::testing::euclid_norm(x));
    ++checked;
  }
}

TEST(WedgeDiamondMap, Examples) {
  expect_point_near(wedge_to_diamond({0, 0.5, 0, 0}, {1.0, 0.0}), {0, 0, 0, 0}, 1e-15);
  // General spec composes dilation and translation with the unit map.
  expect_point_near(wedge_to_diamond({0, 0.5, 0, 0}, {3.0, -2.0}), {0, -2.0, 0, 0}, 1e-14);
  const SpacetimePoint x{0.3, 1.1, -0.2, 0.4};
  expect_point_near(diamond_to_wedge(wedge_to_diamond(x, {1.0, 0.0}), {1.0, 0.0}), x, 1e-12);
}

TEST(WedgeDiamondMap, OutOfRegionInputs) {
  EXPECT_EQ(kind_of([] { wedge_to_diamond({2, 1, 0, 0}, {1.0, 0.0}); }), ErrorKind::OutOfRegion);
  EXPECT_EQ(kind_of([] { diamond_to_wedge({0, 1.5, 0, 0}, {1.0, 0.0}); }), ErrorKind::OutOfRegion);
}

// Rejection-sampled membership oracle in both directions.
TEST(WedgeDiamondMap, MembershipTransport) {
  auto rng = make_rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const DiamondSpec unit{1.0, 0.0};
  const DiamondSpec general{2.5, -0.75};
  int wedge_hits = 0;
  while (wedge_hits < 10000) {
    const SpacetimePoint x{u(rng), u(rng), u(rng), u(rng)};
    if (!in_wedge(x, {})) continue;
    ++wedge_hits;
    const SpacetimePoint y = wedge_to_diamond(x, unit);
    ASSERT_TRUE(in_diamond(y, unit));
    ASSERT_TRUE(in_diamond(wedge_to_diamond(x, general), general));
    const SpacetimePoint back = diamond_to_wedge(y, unit);
    EXPECT_LE(ttflow::testing::max_abs_diff(back, x), 1e-10 * std::max(1.0, ttflow::testing::euclid_norm(x)));
  }
  int diamond_hits = 0;
  while (diamond_hits < 10000) {
    const SpacetimePoint y{0.5 * u(rng) / 2.0, u(rng) / 4.0, u(rng) / 4.0, u(rng) / 4.0};
    if (!in_diamond(y, unit)) continue;
    ++diamond_hits;
    ASSERT_TRUE(in_wedge(diamond_to_wedge(y, unit), {}));
  }
}

// Finite-difference check that the map preserves the causal character of
// small separations (conformal factor > 0).
TEST(WedgeDiamondMap, ConformalitySpotCheck) {
  auto rng = make_rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const DiamondSpec unit{1.0, 0.0};
  int checked = 0;
  while (checked < 100) {
    const SpacetimePoint x = ttflow::testing::random_wedge_point(rng);
    SpacetimePoint delta{u(rng), u(rng), u(rng), u(rng)};
    const double e2 = ttflow::testing::euclid_norm(delta);
    if (std::abs(minkowski_square(delta)) < 0.1 * e2 * e2) continue;
    delta = (1e-6 / e2) * delta;
    if (!in_wedge(x + delta, {})) continue;
    const SpacetimePoint image_delta = wedge_to_diamond(x + delta, unit) - wedge_to_diamond(x, unit);
    EXPECT_GT(minkowski_square(image_delta) / minkowski_square(delta), 0.0);
    ++checked;
  }
}
