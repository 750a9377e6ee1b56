#include "torus_echo/phase_scan.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "torus_echo/csv.hpp"
#include "torus_echo/parallel.hpp"

namespace torus_echo {

namespace {

class ProgressReporter {
 public:
  ProgressReporter(const SweepSpec& spec, std::size_t total) : callback_(spec.progress), total_(total) {}

  void tick() {
    if (!callback_) return;
    std::lock_guard lock(mutex_);
    callback_(++done_, total_);
  }

 private:
  const std::function<void(std::size_t, std::size_t)>& callback_;
  std::size_t total_;
  std::size_t done_ = 0;
  std::mutex mutex_;
};

void check_positive_finite(const std::vector<double>& values, const char* what) {
  if (values.empty()) throw std::invalid_argument(std::string(what) + " grid is empty");
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) + " values must be finite and >= 0");
    }
  }
}

void require_pure(const SweepSpec& spec, const char* op) {
  if (spec.kind == SweepKind::Trace) {
    throw std::invalid_argument(std::string(op) + " needs a pure-state sweep kind");
  }
}

}  // namespace

std::vector<double> linspace(double min, double max, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be >= 1");
  if (count == 1) return {min};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = min + (max - min) * i / (count - 1);
  }
  return out;
}

void validate(const SweepSpec& spec) {
  check_positive_finite(spec.k_values, "K");
  if (spec.dkh_values.empty()) throw std::invalid_argument("deltaK/hbar grid is empty");
  for (double v : spec.dkh_values) {
    if (!std::isfinite(v)) throw std::invalid_argument("deltaK/hbar values must be finite");
  }
  if (spec.n < 2) throw std::invalid_argument("N must be >= 2");
  if (spec.horizon < 1) throw std::invalid_argument("T must be >= 1");
  if (spec.kind != SweepKind::Trace && spec.grid_side < 1) {
    throw std::invalid_argument("grid side s must be >= 1");
  }
}

MapSpec map_at(MapFamily family, HilbertDim dim, double k) {
  return family == MapFamily::Standard ? standard_map(dim, k) : harper_map(dim, k, k);
}

double PhaseGrid::mean() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::vector<MmRow> sweep_mm(const SweepSpec& spec) {
  validate(spec);
  if (spec.kind != SweepKind::Trace) throw std::invalid_argument("sweep_mm needs kind = trace");
  check_matrix_guard(spec.n);
  const HilbertDim dim(spec.n);

  std::vector<MmRow> rows;
  for (double dkh : spec.dkh_values) {
    for (double k : spec.k_values) rows.push_back({k, dkh, {}});
  }
  ProgressReporter progress(spec, rows.size());
  // One worker per cell when there are enough cells, otherwise split the
  // columns of each trace.
  const bool per_cell = rows.size() >= static_cast<std::size_t>(spec.threads);
  parallel_for(rows.size(), per_cell ? spec.threads : 1, [&](std::size_t i) {
    const auto pair = make_pair_dkh(map_at(spec.family, dim, rows[i].k), rows[i].dkh);
    const auto series = fidelity_trace(pair, spec.horizon, per_cell ? 1 : spec.threads);
    rows[i].result = measure(series);
    progress.tick();
  });
  return rows;
}

PhaseGrid scan_phase_space(const SweepSpec& spec, double k, double dkh) {
  validate(spec);
  require_pure(spec, "scan_phase_space");
  const HilbertDim dim(spec.n);
  const EchoPropagators props(make_pair_dkh(map_at(spec.family, dim, k), dkh));
  const int s = spec.grid_side;

  PhaseGrid grid{s, std::vector<double>(static_cast<std::size_t>(s) * s), spec.family,
                 k, dkh, spec.n, spec.horizon};
  ProgressReporter progress(spec, grid.values.size());
  parallel_for(grid.values.size(), spec.threads, [&](std::size_t cell) {
    const int p_index = static_cast<int>(cell) / s;
    const int q_index = static_cast<int>(cell) % s;
    const PhasePoint center{static_cast<double>(q_index) / s, static_cast<double>(p_index) / s};
    grid.values[cell] = measure(fidelity_pure(props, center, spec.horizon)).value;
    progress.tick();
  });
  return grid;
}

std::vector<AvgRow> sweep_avg_mp(const SweepSpec& spec) {
  validate(spec);
  require_pure(spec, "sweep_avg_mp");
  std::vector<AvgRow> rows;
  for (double dkh : spec.dkh_values) {
    for (double k : spec.k_values) rows.push_back({k, dkh, 0.0});
  }
  SweepSpec inner = spec;
  inner.progress = nullptr;
  ProgressReporter progress(spec, rows.size());
  for (auto& row : rows) {
    row.value = scan_phase_space(inner, row.k, row.dkh).mean();
    progress.tick();
  }
  return rows;
}

std::vector<LinePoint> line_scan(const SweepSpec& spec, double k, double dkh,
                                 const std::vector<PhasePoint>& points) {
  validate(spec);
  require_pure(spec, "line_scan");
  const HilbertDim dim(spec.n);
  const EchoPropagators props(make_pair_dkh(map_at(spec.family, dim, k), dkh));
  std::vector<LinePoint> out(points.size());
  ProgressReporter progress(spec, points.size());
  parallel_for(points.size(), spec.threads, [&](std::size_t i) {
    out[i] = {points[i], measure(fidelity_pure(props, points[i], spec.horizon)).value};
    progress.tick();
  });
  return out;
}

void write_grid_csv(std::ostream& out, const PhaseGrid& grid, std::string_view metadata) {
  if (!metadata.empty()) out << "# " << metadata << '\n';
  out << "# family,K,dkh,N,T,s\n";
  out << "# " << family_name(grid.family) << ',' << format_double(grid.k) << ','
      << format_double(grid.dkh) << ',' << grid.n << ',' << grid.horizon << ',' << grid.side
      << '\n';
  for (int p = 0; p < grid.side; ++p) {
    for (int q = 0; q < grid.side; ++q) {
      if (q > 0) out << ',';
      out << format_double(grid.at(q, p));
    }
    out << '\n';
  }
}

void write_grid_pgm(std::ostream& out, const PhaseGrid& grid) {
  const auto [lo_it, hi_it] = std::minmax_element(grid.values.begin(), grid.values.end());
  const double lo = grid.values.empty() ? 0.0 : *lo_it;
  const double span = grid.values.empty() ? 0.0 : *hi_it - lo;
  out << "P5\n" << grid.side << ' ' << grid.side << "\n255\n";
  for (int p = grid.side - 1; p >= 0; --p) {
    for (int q = 0; q < grid.side; ++q) {
      const double scaled = span > 0.0 ? (grid.at(q, p) - lo) / span : 0.0;
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * scaled))));
    }
  }
}

}  // namespace torus_echo
