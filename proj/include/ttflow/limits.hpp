#pragma once

// Comparison of the exact diamond flow with its two limiting flows: the
// Minkowski time translation (large diamond, L1 = 0) and the wedge boost
// (left corner anchored at the origin, L1 = L).

#include <vector>

#include "ttflow/spacetime.hpp"

namespace ttflow {

enum class LimitMode { Minkowski, Wedge };

const char* to_string(LimitMode mode) noexcept;

struct DeviationReport {
  DiamondSpec spec;
  LimitMode mode;
  NullRadialCoords start;
  std::vector<double> t_values;
  std::vector<NullPair> exact;  // in-plane signed coordinates x0 ± x1
  std::vector<NullPair> limit;
  std::vector<double> abs_dev;
  std::vector<double> rel_dev;
  double max_abs_dev = 0.0;
  double max_rel_dev = 0.0;
};

struct RegimeCell {
  double radius;        // distance of the start from the diamond center
  double max_rel_dev;
  bool agrees;
  double ratio;         // r/L, the wedge/diamond temperature ratio at the start
};

struct RegimeMap {
  LimitMode mode;
  DiamondSpec spec;
  double t_probe;
  double tol;
  std::vector<RegimeCell> cells;  // increasing radius
};

/// (L t / 2 + r, L t / 2 - r) for a start (r, -r).
NullPair minkowski_limit_traj(const NullRadialCoords& start, double t, double L);

/// (r e^t, -r e^-t).
NullPair wedge_limit_traj(double r, double t);

/// Samples exact and limiting orbits from `start` on n uniform points of
/// [t_min, t_max]. Minkowski mode needs L1 = 0, wedge mode L1 = L; the start
/// must be of the form (r, -r). n = 1 requires t_min == t_max.
DeviationReport deviation_scan(LimitMode mode, const NullRadialCoords& start, const DiamondSpec& d,
                               double t_min, double t_max, int n);

/// Number of t-samples on [0, t_probe] used per regime-map cell.
inline constexpr int kRegimeProbeSamples = 65;

/// Agreement map over starts at center distance r in (0, L (1 - 1e-6)),
/// spaced logarithmically in L - r.
RegimeMap regime_map(LimitMode mode, const DiamondSpec& d, double t_probe, double tol, int grid_n);

}  // namespace ttflow
