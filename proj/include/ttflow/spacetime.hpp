#pragma once

// Minkowski geometry in natural units with signature (+,-,-,-): events,
// radial null coordinates, wedge and diamond regions, and the conformal
// maps carrying the right wedge onto a causal diamond.

#include <variant>

namespace ttflow {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

inline constexpr Vec3 kAxis1{1.0, 0.0, 0.0};

/// An event (x0, x1, x2, x3). Also used for tangent 4-vectors.
struct SpacetimePoint {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  Vec3 spatial() const { return {x1, x2, x3}; }
  bool finite() const;

  friend SpacetimePoint operator+(const SpacetimePoint& a, const SpacetimePoint& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend SpacetimePoint operator-(const SpacetimePoint& a, const SpacetimePoint& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend SpacetimePoint operator*(double s, const SpacetimePoint& a) {
    return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
  }
  friend bool operator==(const SpacetimePoint&, const SpacetimePoint&) = default;
};

/// Radial null coordinates z± = x0 ± r around a reference point on axis 1.
///
/// r >= 0 is the Euclidean distance of the spatial position from the
/// reference point and `direction` the unit vector pointing to it. Diamond
/// operations take coordinates referenced to the origin; the diamond center
/// is supplied separately through DiamondSpec.
class NullRadialCoords {
 public:
  /// Throws InvalidOrdering if z_plus < z_minus, InvalidArgument if the
  /// direction is not a unit vector (tolerance 1e-12) or a value is not finite.
  NullRadialCoords(double z_plus, double z_minus, Vec3 direction = kAxis1);

  double z_plus() const { return z_plus_; }
  double z_minus() const { return z_minus_; }
  const Vec3& direction() const { return direction_; }

  double time() const { return 0.5 * (z_plus_ + z_minus_); }
  double radius() const { return 0.5 * (z_plus_ - z_minus_); }

 private:
  double z_plus_;
  double z_minus_;
  Vec3 direction_;
};

/// Right wedge x1 - apex_x1 > |x0|.
struct WedgeSpec {
  double apex_x1 = 0.0;

  void validate() const;
};

/// Causal diamond |x0| + |x_vec - translation_L1 e1| < size_L.
struct DiamondSpec {
  double size_L = 1.0;
  double translation_L1 = 0.0;

  void validate() const;
};

using RegionSpec = std::variant<WedgeSpec, DiamondSpec>;

/// Null pair (plus, minus) without the radial-coordinate invariants; used
/// for in-plane signed coordinates x0 ± x1 and for null-component vectors.
struct NullPair {
  double plus = 0.0;
  double minus = 0.0;
};

double minkowski_square(const SpacetimePoint& x);

NullRadialCoords to_null(const SpacetimePoint& x, double center_x1);
SpacetimePoint from_null(const NullRadialCoords& z, double center_x1);

/// In-plane signed null coordinates (x0 + x1, x0 - x1) of a point in the
/// x0-x1 plane, converted to origin-referenced radial coordinates.
NullRadialCoords from_planar(const NullPair& signed_null);
/// Inverse of from_planar; throws InvalidArgument for off-plane directions.
NullPair to_planar(const NullRadialCoords& z);

bool in_wedge(const SpacetimePoint& x, const WedgeSpec& w);
bool in_diamond(const SpacetimePoint& x, const DiamondSpec& d);
bool in_region(const SpacetimePoint& x, const RegionSpec& region);

/// x -> (-x0, -x_vec) / (x.x). Throws LightlikeInput near the light cone.
SpacetimePoint ray_inversion(const SpacetimePoint& x);

/// translate(L1) o dilate(L) o [x -> rho(x + e1/2) - e1]; maps the right
/// wedge at the origin onto the diamond.
SpacetimePoint wedge_to_diamond(const SpacetimePoint& x, const DiamondSpec& d);
SpacetimePoint diamond_to_wedge(const SpacetimePoint& x, const DiamondSpec& d);

}  // namespace ttflow
