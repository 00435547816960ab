#pragma once

// Local directional temperature carried by the modular flow: the inverse
// temperature field beta, the temperature T = 1/(2 pi |beta|), proper
// acceleration of the orbits, and the wedge/diamond temperature ratio.
//
// Intrinsic quantities are evaluated relative to the diamond center; points
// of a translated diamond are shifted before evaluation.

#include "ttflow/spacetime.hpp"

namespace ttflow {

struct TemperatureSample {
  NullRadialCoords point;
  NullPair beta_null;   // (beta_+, beta_-), length
  double beta_norm;     // sqrt(beta_+ beta_-)
  double temperature;   // inverse length
  double acceleration;  // inverse length
};

struct FourMomentum {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

/// beta_± = (L^2 - (z± ∓ L1)^2) / (2L); the null components of the flow
/// generator.
NullPair beta_field(const NullRadialCoords& z, const DiamondSpec& d);

/// Unruh temperature a / (2 pi).
double wedge_temperature(double acceleration);

TemperatureSample diamond_temperature(const NullRadialCoords& z, const DiamondSpec& d);

/// a = 2r' / sqrt((L^2 - z+'^2)(L^2 - z-'^2)) in centered coordinates.
double acceleration_at(const NullRadialCoords& z, const DiamondSpec& d);

/// T_wedge / T_diamond = r'/L, with r' the distance from the diamond center.
/// Unlike the other operations it accepts points arbitrarily close to the
/// boundary.
double temperature_ratio(const NullRadialCoords& z, const DiamondSpec& d);

/// Radius of the orbit starting at (x0, r) = (0, r0) after modular time t,
/// for a diamond of size L centered at the origin.
double radius_along_flow(double r0, double t, double L);

/// Modular time t* at which delta_r sinh^2(t/2) reaches tol * L.
double agreement_window(double delta_r, double L, double tol);

/// 2 pi P.beta with beta the generator 4-vector at z.
double relative_entropy(const FourMomentum& p, const NullRadialCoords& z, const DiamondSpec& d);

}  // namespace ttflow
