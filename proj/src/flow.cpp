#include "ttflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "ttflow/error.hpp"

namespace ttflow {

namespace {

constexpr double kBoundaryMargin = 1e-10;
constexpr double kPlaneTolerance = 1e-12;
constexpr double kDenominatorFloor = 1e-14;
constexpr double kAccelerationStep = 1e-4;

// Unit-diamond flow on one normalized null coordinate y = z / L.
double unit_null_flow(double y, double t) {
  const double c = std::cosh(0.5 * t);
  const double s = std::sinh(0.5 * t);
  const double den = y * s + c;
  if (std::abs(den) < kDenominatorFloor) {
    throw Error(ErrorKind::DegenerateDenominator, "diamond flow denominator vanishes");
  }
  return (y * c + s) / den;
}

bool is_translated(const DiamondSpec& d) { return d.translation_L1 != 0.0; }

void require_null_interior(const NullPair& centered, const DiamondSpec& d, double relative_margin) {
  const double reach = std::max(std::abs(centered.plus), std::abs(centered.minus));
  if (!(reach < d.size_L * (1.0 - relative_margin))) {
    throw Error(ErrorKind::OutOfRegion, "point is not strictly inside the diamond");
  }
}

// True when dz+/dt of the record equals d(planar minus)/dt, i.e. the point
// sits on the negative x1 side of the origin.
bool mirrored(const NullRadialCoords& z) { return z.radius() > 0.0 && z.direction().x < 0.0; }

SpacetimePoint diamond_generator_unchecked(const SpacetimePoint& x, const DiamondSpec& d) {
  const double L = d.size_L;
  const Vec3 offset{x.x1 - d.translation_L1, x.x2, x.x3};
  const double r2 = offset.x * offset.x + offset.y * offset.y + offset.z * offset.z;
  const double k = -x.x0 / L;
  return {(L * L - x.x0 * x.x0 - r2) / (2.0 * L), k * offset.x, k * offset.y, k * offset.z};
}

SpacetimePoint generator_unchecked(const SpacetimePoint& x, const RegionSpec& region) {
  if (const auto* w = std::get_if<WedgeSpec>(&region)) {
    return {x.x1 - w->apex_x1, x.x0, 0.0, 0.0};
  }
  return diamond_generator_unchecked(x, std::get<DiamondSpec>(region));
}

bool in_closed_region(const SpacetimePoint& x, const RegionSpec& region) {
  if (!x.finite()) return false;
  if (const auto* w = std::get_if<WedgeSpec>(&region)) {
    return x.x1 - w->apex_x1 >= std::abs(x.x0);
  }
  const auto& d = std::get<DiamondSpec>(region);
  return Vec3{x.x1 - d.translation_L1, x.x2, x.x3}.norm() + std::abs(x.x0) <= d.size_L;
}

void validate_region(const RegionSpec& region) {
  std::visit([](const auto& spec) { spec.validate(); }, region);
}

double minkowski_norm(const SpacetimePoint& v) { return std::sqrt(std::abs(minkowski_square(v))); }

}  // namespace

NullPair centered_null(const NullRadialCoords& z, const DiamondSpec& d, double relative_margin) {
  d.validate();
  NullPair centered{z.z_plus(), z.z_minus()};
  if (is_translated(d)) {
    NullPair planar{};
    try {
      planar = to_planar(z);
    } catch (const Error&) {
      throw Error(ErrorKind::OutOfRegion, "translated diamond requires a point in the x0-x1 plane");
    }
    centered = {planar.plus - d.translation_L1, planar.minus + d.translation_L1};
  }
  require_null_interior(centered, d, relative_margin);
  return centered;
}

void require_flow_interior(const SpacetimePoint& x, const RegionSpec& region) {
  validate_region(region);
  if (!in_region(x, region)) {
    throw Error(ErrorKind::OutOfRegion, "point is not strictly inside the region");
  }
  if (const auto* d = std::get_if<DiamondSpec>(&region)) {
    const double L = d->size_L;
    const double r = Vec3{x.x1 - d->translation_L1, x.x2, x.x3}.norm();
    if (!(r + std::abs(x.x0) < L * (1.0 - kBoundaryMargin))) {
      throw Error(ErrorKind::OutOfRegion, "point is within 1e-10 L of the diamond boundary");
    }
    if (is_translated(*d) &&
        (std::abs(x.x2) > kPlaneTolerance * L || std::abs(x.x3) > kPlaneTolerance * L)) {
      throw Error(ErrorKind::OutOfRegion, "translated diamond requires a point in the x0-x1 plane");
    }
  }
}

SpacetimePoint wedge_flow(const SpacetimePoint& x, double t, const WedgeSpec& w) {
  require_flow_interior(x, w);
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  const double w1 = x.x1 - w.apex_x1;
  return {x.x0 * c + w1 * s, w.apex_x1 + w1 * c + x.x0 * s, x.x2, x.x3};
}

NullRadialCoords diamond_flow(const NullRadialCoords& z, double t, const DiamondSpec& d) {
  const NullPair c = centered_null(z, d);
  const double L = d.size_L;
  const double plus = L * unit_null_flow(c.plus / L, t);
  const double minus = L * unit_null_flow(c.minus / L, t);
  if (!is_translated(d)) {
    // The Moebius map is increasing, so ordering only breaks by rounding.
    const double mid = 0.5 * (plus + minus);
    return plus >= minus ? NullRadialCoords(plus, minus, z.direction())
                         : NullRadialCoords(mid, mid, z.direction());
  }
  return from_planar({plus + d.translation_L1, minus - d.translation_L1});
}

SpacetimePoint diamond_flow(const SpacetimePoint& x, double t, const DiamondSpec& d) {
  require_flow_interior(x, d);
  if (!is_translated(d)) {
    return from_null(diamond_flow(to_null(x, 0.0), t, d), 0.0);
  }
  const NullRadialCoords z = from_planar({x.x0 + x.x1, x.x0 - x.x1});
  return from_null(diamond_flow(z, t, d), 0.0);
}

SpacetimePoint flow(const SpacetimePoint& x, double t, const RegionSpec& region) {
  if (const auto* w = std::get_if<WedgeSpec>(&region)) {
    return wedge_flow(x, t, *w);
  }
  return diamond_flow(x, t, std::get<DiamondSpec>(region));
}

SpacetimePoint generator(const SpacetimePoint& x, const RegionSpec& region) {
  require_flow_interior(x, region);
  return generator_unchecked(x, region);
}

NullPair null_generator(const NullRadialCoords& z, const DiamondSpec& d) {
  const NullPair c = centered_null(z, d);
  const double L = d.size_L;
  const double beta_plus = (L * L - c.plus * c.plus) / (2.0 * L);
  const double beta_minus = (L * L - c.minus * c.minus) / (2.0 * L);
  if (is_translated(d) && mirrored(z)) {
    return {beta_minus, beta_plus};
  }
  return {beta_plus, beta_minus};
}

double proper_time_rate(const NullRadialCoords& z, const DiamondSpec& d) {
  const NullPair beta = null_generator(z, d);
  return std::sqrt(beta.plus * beta.minus);
}

double proper_time_rate(const SpacetimePoint& x, const RegionSpec& region) {
  return minkowski_norm(generator(x, region));
}

SpacetimePoint integrate_flow_rk4(const SpacetimePoint& x, double t, int n_steps,
                                  const RegionSpec& region) {
  if (n_steps < 1) {
    throw Error(ErrorKind::InvalidArgument, "n_steps must be at least 1");
  }
  require_flow_interior(x, region);
  const double h = t / n_steps;
  auto stage = [&](const SpacetimePoint& p) {
    if (!in_closed_region(p, region)) {
      throw Error(ErrorKind::StepOutOfRegion, "RK4 stage left the region; reduce the step");
    }
    return generator_unchecked(p, region);
  };
  SpacetimePoint y = x;
  for (int i = 0; i < n_steps; ++i) {
    const SpacetimePoint k1 = stage(y);
    const SpacetimePoint k2 = stage(y + (0.5 * h) * k1);
    const SpacetimePoint k3 = stage(y + (0.5 * h) * k2);
    const SpacetimePoint k4 = stage(y + h * k3);
    y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  if (!in_closed_region(y, region)) {
    throw Error(ErrorKind::StepOutOfRegion, "RK4 result left the region");
  }
  return y;
}

Trajectory sample_trajectory(const SpacetimePoint& start, double t_min, double t_max, int n,
                             const RegionSpec& region) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "a trajectory needs at least two samples");
  }
  if (!(t_min < t_max)) {
    throw Error(ErrorKind::InvalidArgument, "t_min must be less than t_max");
  }
  require_flow_interior(start, region);
  Trajectory traj{region, {}, {}, start};
  traj.t_values.reserve(n);
  traj.points.reserve(n);
  const double dt = (t_max - t_min) / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double t = k + 1 == n ? t_max : t_min + k * dt;
    traj.t_values.push_back(t);
    traj.points.push_back(flow(start, t, region));
  }
  return traj;
}

double proper_acceleration(const SpacetimePoint& start, const RegionSpec& region) {
  require_flow_interior(start, region);
  auto velocity = [&](double t) {
    const SpacetimePoint g = generator_unchecked(flow(start, t, region), region);
    return (1.0 / minkowski_norm(g)) * g;
  };
  const double h = kAccelerationStep;
  const double rate = minkowski_norm(generator_unchecked(start, region));
  const SpacetimePoint accel = (1.0 / (2.0 * h * rate)) * (velocity(h) - velocity(-h));
  return minkowski_norm(accel);
}

}  // namespace ttflow
