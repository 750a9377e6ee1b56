#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "torus_echo/echo_engine.hpp"

namespace torus_echo {

/// Maximal run of strict increases of |f| from kick t_start to kick t_end.
struct RiseSegment {
  int t_start = 0;
  int t_end = 0;
  double rise = 0.0;
};

struct NmResult {
  double value = 0.0;
  std::vector<RiseSegment> segments;
  int horizon = 0;
};

/// BLP measure of a dephasing qubit from |f(t)|:
/// value = 2 * sum_t max(0, |f(t)| - |f(t-1)|). Equal consecutive values
/// contribute nothing and end a segment.
NmResult measure(std::span<const double> moduli);
NmResult measure(const FidelitySeries& series);

/// Running value of the measure up to each t = 0..T.
std::vector<std::pair<int, double>> measure_vs_time(std::span<const double> moduli);
std::vector<std::pair<int, double>> measure_vs_time(const FidelitySeries& series);

struct FluctuationStats {
  double mean = 0.0;
  double variance = 0.0;
  /// Counts over equal-width bins of [0, 1]; values >= 1 land in the last bin.
  std::vector<std::size_t> histogram;
  /// Frequencies in cycles per kick, k / L for k = 0..L/2.
  std::vector<double> frequencies;
  /// |X_k|^2 / L of the mean-subtracted window.
  std::vector<double> power;
};

inline constexpr int kDefaultHistogramBins = 20;

/// Statistics of |f(t)| for t in the half-open window [t0, t1).
FluctuationStats fluctuation_stats(std::span<const double> moduli, int t0, int t1,
                                   int bins = kDefaultHistogramBins);
FluctuationStats fluctuation_stats(const FidelitySeries& series, int t0, int t1,
                                   int bins = kDefaultHistogramBins);

}  // namespace torus_echo
