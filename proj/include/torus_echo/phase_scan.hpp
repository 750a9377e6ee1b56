#pragma once

#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "torus_echo/echo_engine.hpp"
#include "torus_echo/nm_measures.hpp"

namespace torus_echo {

enum class SweepKind { Trace, PureAverage, PureGrid };

/// Evenly spaced grid of `count` values from `min` to `max` inclusive.
std::vector<double> linspace(double min, double max, int count);

struct SweepSpec {
  MapFamily family = MapFamily::Standard;
  std::vector<double> k_values;
  std::vector<double> dkh_values;
  int n = 256;
  int horizon = 1000;
  SweepKind kind = SweepKind::Trace;
  /// Side s of the s x s coherent-state grid used by pure-state sweeps.
  int grid_side = 16;
  int threads = 1;
  /// Called after each completed cell with (done, total); may be empty.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Throws std::invalid_argument on empty grids or out-of-range values.
void validate(const SweepSpec& spec);

/// The map of `family` at kick strength K; the Harper map uses K1 = K2 = K.
MapSpec map_at(MapFamily family, HilbertDim dim, double k);

struct MmRow {
  double k = 0.0;
  double dkh = 0.0;
  NmResult result;
};

struct AvgRow {
  double k = 0.0;
  double dkh = 0.0;
  double value = 0.0;
};

/// Mixed-environment measure from the trace fidelity, one row per (K, dkh)
/// with K varying fastest.
std::vector<MmRow> sweep_mm(const SweepSpec& spec);

/// Mean of the pure-state measure over the s x s coherent-state grid, same
/// row order as sweep_mm.
std::vector<AvgRow> sweep_avg_mp(const SweepSpec& spec);

/// s x s grid of pure-state measures; cell (i, j) is centered at
/// (q, p) = (i/s, j/s). Stored with the momentum index as the row.
struct PhaseGrid {
  int side = 0;
  std::vector<double> values;
  MapFamily family = MapFamily::Standard;
  double k = 0.0;
  double dkh = 0.0;
  int n = 0;
  int horizon = 0;

  double at(int q_index, int p_index) const {
    return values[static_cast<std::size_t>(p_index) * static_cast<std::size_t>(side) +
                  static_cast<std::size_t>(q_index)];
  }
  double mean() const;
};

PhaseGrid scan_phase_space(const SweepSpec& spec, double k, double dkh);

struct LinePoint {
  PhasePoint center;
  double value = 0.0;
};

std::vector<LinePoint> line_scan(const SweepSpec& spec, double k, double dkh,
                                 const std::vector<PhasePoint>& points);

/// s rows of s comma-separated values (row = momentum index), preceded by
/// the metadata comment lines.
void write_grid_csv(std::ostream& out, const PhaseGrid& grid, std::string_view metadata = {});
/// Binary 8-bit PGM, linear min-max normalization, top row = highest p.
void write_grid_pgm(std::ostream& out, const PhaseGrid& grid);

}  // namespace torus_echo
