#pragma once

// Closed-form modular flows of the wedge (boosts about the apex) and of the
// causal diamond, their generator fields, and a Runge-Kutta oracle.

#include <vector>

#include "ttflow/spacetime.hpp"

namespace ttflow {

/// Ordered samples of one modular-flow orbit.
struct Trajectory {
  RegionSpec region;
  std::vector<double> t_values;
  std::vector<SpacetimePoint> points;
  SpacetimePoint start;
};

SpacetimePoint wedge_flow(const SpacetimePoint& x, double t, const WedgeSpec& w);

/// Diamond flow on origin-referenced null coordinates. For a translated
/// diamond (L1 != 0) the point must lie in the x0-x1 plane. The radial
/// direction is unchanged for untranslated diamonds.
NullRadialCoords diamond_flow(const NullRadialCoords& z, double t, const DiamondSpec& d);

SpacetimePoint diamond_flow(const SpacetimePoint& x, double t, const DiamondSpec& d);

SpacetimePoint flow(const SpacetimePoint& x, double t, const RegionSpec& region);

/// d/dt of the flow at t = 0, as a 4-vector at x.
SpacetimePoint generator(const SpacetimePoint& x, const RegionSpec& region);

/// Null coordinates relative to the diamond center (signed in-plane pair
/// shifted by -/+ L1 for translated diamonds). Throws OutOfRegion unless the
/// point is inside with at least relative_margin * L to spare.
NullPair centered_null(const NullRadialCoords& z, const DiamondSpec& d, double relative_margin = 1e-10);

/// (dz+/dt, dz-/dt) at t = 0 for the components of z as given.
NullPair null_generator(const NullRadialCoords& z, const DiamondSpec& d);

/// dtau/dt = sqrt(beta_+ beta_-), the Minkowski norm of the generator.
double proper_time_rate(const NullRadialCoords& z, const DiamondSpec& d);
double proper_time_rate(const SpacetimePoint& x, const RegionSpec& region);

/// Classical RK4 on the generator field; exists as an oracle for the
/// closed-form flows.
SpacetimePoint integrate_flow_rk4(const SpacetimePoint& x, double t, int n_steps,
                                  const RegionSpec& region);

/// n >= 2 uniformly spaced samples on [t_min, t_max], each evaluated with the
/// closed-form flow.
Trajectory sample_trajectory(const SpacetimePoint& start, double t_min, double t_max, int n,
                             const RegionSpec& region);

/// Proper acceleration of the orbit through `start`, obtained numerically
/// from the proper-time reparameterized velocity by central differences.
double proper_acceleration(const SpacetimePoint& start, const RegionSpec& region);

/// Throws OutOfRegion unless x is usable as a flow input: strictly inside,
/// at least 1e-10 L from a diamond boundary, and in the x0-x1 plane for a
/// translated diamond.
void require_flow_interior(const SpacetimePoint& x, const RegionSpec& region);

}  // namespace ttflow
