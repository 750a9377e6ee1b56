#include "torus_echo/nm_measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torus_echo/fft.hpp"

namespace torus_echo {

NmResult measure(std::span<const double> moduli) {
  if (moduli.size() < 2) throw std::invalid_argument("measure: series needs at least 2 points");
  NmResult result;
  result.horizon = static_cast<int>(moduli.size()) - 1;

  double sum = 0.0;
  bool open = false;
  for (std::size_t t = 1; t < moduli.size(); ++t) {
    const double step = moduli[t] - moduli[t - 1];
    if (step > 0.0) {
      sum += step;
      if (!open) {
        result.segments.push_back({static_cast<int>(t) - 1, static_cast<int>(t), 0.0});
        open = true;
      }
      auto& seg = result.segments.back();
      seg.t_end = static_cast<int>(t);
      seg.rise += step;
    } else {
      open = false;
    }
  }
  result.value = 2.0 * sum;
  return result;
}

NmResult measure(const FidelitySeries& series) { return measure(series.moduli()); }

std::vector<std::pair<int, double>> measure_vs_time(std::span<const double> moduli) {
  if (moduli.size() < 2) {
    throw std::invalid_argument("measure_vs_time: series needs at least 2 points");
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(moduli.size());
  double sum = 0.0;
  out.emplace_back(0, 0.0);
  for (std::size_t t = 1; t < moduli.size(); ++t) {
    const double step = moduli[t] - moduli[t - 1];
    if (step > 0.0) sum += step;
    out.emplace_back(static_cast<int>(t), 2.0 * sum);
  }
  return out;
}

std::vector<std::pair<int, double>> measure_vs_time(const FidelitySeries& series) {
  return measure_vs_time(series.moduli());
}

FluctuationStats fluctuation_stats(std::span<const double> moduli, int t0, int t1, int bins) {
  if (t0 < 0 || t1 <= t0 || t1 > static_cast<int>(moduli.size())) {
    throw std::invalid_argument("fluctuation_stats: empty or out-of-range window");
  }
  if (bins < 1) throw std::invalid_argument("fluctuation_stats: need at least one bin");
  const auto window = moduli.subspan(static_cast<std::size_t>(t0),
                                     static_cast<std::size_t>(t1 - t0));
  const double len = static_cast<double>(window.size());

  FluctuationStats stats;
  for (double v : window) stats.mean += v;
  stats.mean /= len;
  for (double v : window) stats.variance += (v - stats.mean) * (v - stats.mean);
  stats.variance /= len;

  stats.histogram.assign(static_cast<std::size_t>(bins), 0);
  for (double v : window) {
    auto bin = static_cast<long>(std::floor(v * bins));
    bin = std::clamp<long>(bin, 0, bins - 1);
    ++stats.histogram[static_cast<std::size_t>(bin)];
  }

  std::vector<cplx> signal;
  signal.reserve(window.size());
  for (double v : window) signal.emplace_back(v - stats.mean);
  Fft(static_cast<int>(signal.size())).forward(signal);
  const std::size_t half = signal.size() / 2;
  for (std::size_t k = 0; k <= half; ++k) {
    stats.frequencies.push_back(static_cast<double>(k) / len);
    stats.power.push_back(std::norm(signal[k]) / len);
  }
  return stats;
}

FluctuationStats fluctuation_stats(const FidelitySeries& series, int t0, int t1, int bins) {
  return fluctuation_stats(series.moduli(), t0, t1, bins);
}

}  // namespace torus_echo
