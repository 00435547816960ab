#include "ttflow/limits.hpp"

#include <algorithm>
#include <cmath>

#include "ttflow/error.hpp"
#include "ttflow/flow.hpp"

namespace ttflow {

namespace {

constexpr double kRelativeFloor = 1e-12;
constexpr double kStartTolerance = 1e-12;
constexpr double kRegimeDecades = 6.0;

// Start must sit on x0 = 0.
void require_time_zero(const NullRadialCoords& start) {
  const double scale = std::max(1.0, std::abs(start.z_plus()));
  if (std::abs(start.z_plus() + start.z_minus()) > kStartTolerance * scale) {
    throw Error(ErrorKind::OutOfRange, "limit comparison needs a start of the form (r, -r)");
  }
}

bool same_length(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

std::vector<double> uniform_grid(double t_min, double t_max, int n) {
  if (n < 1 || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::InvalidArgument, "t-grid needs n >= 1 and finite bounds");
  }
  if (n == 1) {
    if (t_min != t_max) {
      throw Error(ErrorKind::InvalidArgument, "a single-sample grid needs t_min == t_max");
    }
    return {t_min};
  }
  if (!(t_min < t_max)) {
    throw Error(ErrorKind::InvalidArgument, "t_min must be less than t_max");
  }
  std::vector<double> t(n);
  const double dt = (t_max - t_min) / (n - 1);
  for (int k = 0; k < n; ++k) {
    t[k] = k + 1 == n ? t_max : t_min + k * dt;
  }
  return t;
}

}  // namespace

const char* to_string(LimitMode mode) noexcept {
  return mode == LimitMode::Minkowski ? "minkowski" : "wedge";
}

NullPair minkowski_limit_traj(const NullRadialCoords& start, double t, double L) {
  require_time_zero(start);
  const double r = start.radius();
  if (!(L > 0.0) || !(r < L)) {
    throw Error(ErrorKind::OutOfRange, "minkowski limit needs 0 <= r < L");
  }
  const double drift = 0.5 * L * t;
  return {drift + r, drift - r};
}

NullPair wedge_limit_traj(double r, double t) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::OutOfRange, "wedge limit needs r > 0");
  }
  return {r * std::exp(t), -r * std::exp(-t)};
}

DeviationReport deviation_scan(LimitMode mode, const NullRadialCoords& start, const DiamondSpec& d,
                               double t_min, double t_max, int n) {
  d.validate();
  const double L = d.size_L;
  if (mode == LimitMode::Minkowski && d.translation_L1 != 0.0) {
    throw Error(ErrorKind::SpecMismatch, "minkowski mode needs L1 = 0");
  }
  if (mode == LimitMode::Wedge && !same_length(d.translation_L1, L)) {
    throw Error(ErrorKind::SpecMismatch, "wedge mode needs L1 = L");
  }
  require_time_zero(start);
  if (mode == LimitMode::Wedge && (start.direction().x <= 0.0 || !(start.radius() < L))) {
    throw Error(ErrorKind::OutOfRange, "wedge mode needs a start (r, -r) with 0 < r < L");
  }

  DeviationReport report{d, mode, start, uniform_grid(t_min, t_max, n), {}, {}, {}, {}, 0.0, 0.0};
  report.exact.reserve(report.t_values.size());
  report.limit.reserve(report.t_values.size());
  for (const double t : report.t_values) {
    const NullRadialCoords moved = diamond_flow(start, t, d);
    NullPair exact{};
    NullPair limit{};
    if (mode == LimitMode::Minkowski) {
      exact = {moved.z_plus(), moved.z_minus()};
      limit = minkowski_limit_traj(start, t, L);
    } else {
      exact = to_planar(moved);
      limit = wedge_limit_traj(start.radius(), t);
    }
    const double abs_dev = std::max(std::abs(exact.plus - limit.plus), std::abs(exact.minus - limit.minus));
    const double scale = std::max({std::abs(limit.plus), std::abs(limit.minus), kRelativeFloor});
    const double rel_dev = abs_dev / scale;
    report.exact.push_back(exact);
    report.limit.push_back(limit);
    report.abs_dev.push_back(abs_dev);
    report.rel_dev.push_back(rel_dev);
    report.max_abs_dev = std::max(report.max_abs_dev, abs_dev);
    report.max_rel_dev = std::max(report.max_rel_dev, rel_dev);
  }
  return report;
}

RegimeMap regime_map(LimitMode mode, const DiamondSpec& d, double t_probe, double tol, int grid_n) {
  d.validate();
  if (grid_n < 1 || !(t_probe > 0.0) || !(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "regime map needs grid_n >= 1, t_probe > 0, tol > 0");
  }
  const double L = d.size_L;
  RegimeMap map{mode, d, t_probe, tol, {}};
  map.cells.reserve(grid_n);
  for (int k = 0; k < grid_n; ++k) {
    const double gap = L * std::pow(10.0, -kRegimeDecades * (k + 1) / (grid_n + 1));
    const double radius = L - gap;
    const double lab_r = mode == LimitMode::Minkowski ? radius : gap;
    const NullRadialCoords start(lab_r, -lab_r);
    const DeviationReport scan = deviation_scan(mode, start, d, 0.0, t_probe, kRegimeProbeSamples);
    map.cells.push_back({radius, scan.max_rel_dev, scan.max_rel_dev <= tol, radius / L});
  }
  return map;
}

}  // namespace ttflow
