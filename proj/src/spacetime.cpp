#include "ttflow/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ttflow/error.hpp"

namespace ttflow {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kLightlikeTolerance = 1e-12;
constexpr double kPlaneTolerance = 1e-12;

SpacetimePoint shift_x1(const SpacetimePoint& x, double dx1) {
  return {x.x0, x.x1 + dx1, x.x2, x.x3};
}

// x -> rho(x + e1/2) - e1
SpacetimePoint unit_wedge_to_diamond(const SpacetimePoint& x) {
  return shift_x1(ray_inversion(shift_x1(x, 0.5)), -1.0);
}

// y -> rho(y + e1) - e1/2
SpacetimePoint unit_diamond_to_wedge(const SpacetimePoint& y) {
  return shift_x1(ray_inversion(shift_x1(y, 1.0)), -0.5);
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool SpacetimePoint::finite() const {
  return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
}

NullRadialCoords::NullRadialCoords(double z_plus, double z_minus, Vec3 direction)
    : z_plus_(z_plus), z_minus_(z_minus), direction_(direction) {
  if (!std::isfinite(z_plus) || !std::isfinite(z_minus)) {
    throw Error(ErrorKind::InvalidArgument, "null coordinates must be finite");
  }
  if (z_plus < z_minus) {
    throw Error(ErrorKind::InvalidOrdering, "z_plus < z_minus");
  }
  if (std::abs(direction.norm() - 1.0) > kUnitTolerance) {
    throw Error(ErrorKind::InvalidArgument, "direction is not a unit vector");
  }
}

void WedgeSpec::validate() const {
  if (!std::isfinite(apex_x1)) {
    throw Error(ErrorKind::InvalidArgument, "wedge apex must be finite");
  }
}

void DiamondSpec::validate() const {
  if (!(size_L > 0.0) || !std::isfinite(size_L)) {
    throw Error(ErrorKind::InvalidArgument, "diamond size L must be positive and finite");
  }
  if (!std::isfinite(translation_L1)) {
    throw Error(ErrorKind::InvalidArgument, "diamond translation L1 must be finite");
  }
}

double minkowski_square(const SpacetimePoint& x) {
  return x.x0 * x.x0 - x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3;
}

NullRadialCoords to_null(const SpacetimePoint& x, double center_x1) {
  const Vec3 offset{x.x1 - center_x1, x.x2, x.x3};
  const double r = offset.norm();
  Vec3 direction = kAxis1;
  if (r > 0.0) {
    direction = {offset.x / r, offset.y / r, offset.z / r};
  }
  return NullRadialCoords(x.x0 + r, x.x0 - r, direction);
}

SpacetimePoint from_null(const NullRadialCoords& z, double center_x1) {
  const double r = z.radius();
  const Vec3& n = z.direction();
  return {z.time(), center_x1 + r * n.x, r * n.y, r * n.z};
}

NullRadialCoords from_planar(const NullPair& signed_null) {
  const double x0 = 0.5 * (signed_null.plus + signed_null.minus);
  const double x1 = 0.5 * (signed_null.plus - signed_null.minus);
  return to_null({x0, x1, 0.0, 0.0}, 0.0);
}

NullPair to_planar(const NullRadialCoords& z) {
  const Vec3& n = z.direction();
  const double r = z.radius();
  if (r > 0.0 && (std::abs(n.y) > kPlaneTolerance || std::abs(n.z) > kPlaneTolerance)) {
    throw Error(ErrorKind::InvalidArgument, "point is not in the x0-x1 plane");
  }
  const double x1 = n.x < 0.0 ? -r : r;
  return {z.time() + x1, z.time() - x1};
}

bool in_wedge(const SpacetimePoint& x, const WedgeSpec& w) {
  if (!x.finite()) return false;
  return x.x1 - w.apex_x1 > std::abs(x.x0);
}

bool in_diamond(const SpacetimePoint& x, const DiamondSpec& d) {
  if (!x.finite()) return false;
  const double r = Vec3{x.x1 - d.translation_L1, x.x2, x.x3}.norm();
  return r + std::abs(x.x0) < d.size_L;
}

bool in_region(const SpacetimePoint& x, const RegionSpec& region) {
  return std::visit(
      [&](const auto& spec) {
        using Spec = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<Spec, WedgeSpec>) {
          return in_wedge(x, spec);
        } else {
          return in_diamond(x, spec);
        }
      },
      region);
}

SpacetimePoint ray_inversion(const SpacetimePoint& x) {
  const double sq = minkowski_square(x);
  const double euclid = x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
  if (!(std::abs(sq) > kLightlikeTolerance * std::max(1.0, euclid))) {
    throw Error(ErrorKind::LightlikeInput, "ray inversion is singular on the light cone");
  }
  return (-1.0 / sq) * x;
}

SpacetimePoint wedge_to_diamond(const SpacetimePoint& x, const DiamondSpec& d) {
  d.validate();
  if (!in_wedge(x, WedgeSpec{})) {
    throw Error(ErrorKind::OutOfRegion, "point is not in the right wedge");
  }
  return shift_x1(d.size_L * unit_wedge_to_diamond(x), d.translation_L1);
}

SpacetimePoint diamond_to_wedge(const SpacetimePoint& x, const DiamondSpec& d) {
  d.validate();
  if (!in_diamond(x, d)) {
    throw Error(ErrorKind::OutOfRegion, "point is not in the diamond");
  }
  return unit_diamond_to_wedge((1.0 / d.size_L) * shift_x1(x, -d.translation_L1));
}

}  // namespace ttflow
