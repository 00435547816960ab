#include "ttflow/thermo.hpp"

#include <cmath>
#include <numbers>

#include "ttflow/error.hpp"
#include "ttflow/flow.hpp"

namespace ttflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (L^2 - z+'^2)(L^2 - z-'^2)
double boundary_product(const NullPair& centered, double L) {
  return (L * L - centered.plus * centered.plus) * (L * L - centered.minus * centered.minus);
}

}  // namespace

NullPair beta_field(const NullRadialCoords& z, const DiamondSpec& d) { return null_generator(z, d); }

double wedge_temperature(double acceleration) {
  if (!(acceleration > 0.0)) {
    throw Error(ErrorKind::NonpositiveAcceleration, "Unruh temperature needs a > 0");
  }
  return acceleration / kTwoPi;
}

double acceleration_at(const NullRadialCoords& z, const DiamondSpec& d) {
  const NullPair c = centered_null(z, d);
  const double r_centered = 0.5 * std::abs(c.plus - c.minus);
  return 2.0 * r_centered / std::sqrt(boundary_product(c, d.size_L));
}

TemperatureSample diamond_temperature(const NullRadialCoords& z, const DiamondSpec& d) {
  const NullPair beta = beta_field(z, d);
  const double norm = std::sqrt(beta.plus * beta.minus);
  return TemperatureSample{z, beta, norm, 1.0 / (kTwoPi * norm), acceleration_at(z, d)};
}

double temperature_ratio(const NullRadialCoords& z, const DiamondSpec& d) {
  // r'/L is regular up to the boundary.
  const NullPair c = centered_null(z, d, 0.0);
  return 0.5 * std::abs(c.plus - c.minus) / d.size_L;
}

double radius_along_flow(double r0, double t, double L) {
  if (!(L > 0.0) || !(r0 >= 0.0) || !(r0 <= L) || !std::isfinite(t)) {
    throw Error(ErrorKind::OutOfRange, "radius_along_flow needs L > 0 and 0 <= r0 <= L");
  }
  const double s = std::sinh(0.5 * t);
  const double q = r0 / L;
  return r0 / ((1.0 - q * q) * s * s + 1.0);
}

double agreement_window(double delta_r, double L, double tol) {
  if (!(L > 0.0) || !(delta_r > 0.0) || !(delta_r < L) || !(tol > 0.0)) {
    throw Error(ErrorKind::OutOfRange, "agreement_window needs 0 < delta_r < L and tol > 0");
  }
  return 2.0 * std::asinh(std::sqrt(tol * L / delta_r));
}

double relative_entropy(const FourMomentum& p, const NullRadialCoords& z, const DiamondSpec& d) {
  centered_null(z, d);
  const SpacetimePoint beta = generator(from_null(z, 0.0), d);
  return kTwoPi * (p.p0 * beta.x0 - p.p1 * beta.x1 - p.p2 * beta.x2 - p.p3 * beta.x3);
}

}  // namespace ttflow
