#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "support.hpp"
#include "torus_echo/nm_measures.hpp"

using namespace torus_echo;
using torus_echo::testing::Gen;

namespace {

// 2 * sum over successive (local minimum, following local maximum) pairs,
// found by walking the turning points of the sequence with repeated values
// collapsed.
double extrema_measure(const std::vector<double>& v) {
  std::vector<double> d;
  for (double x : v) {
    if (d.empty() || x != d.back()) d.push_back(x);
  }
  if (d.size() < 2) return 0.0;
  std::vector<double> turning{d.front()};
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    const bool peak = d[i] > d[i - 1] && d[i] > d[i + 1];
    const bool valley = d[i] < d[i - 1] && d[i] < d[i + 1];
    if (peak || valley) turning.push_back(d[i]);
  }
  turning.push_back(d.back());
  double total = 0.0;
  for (std::size_t i = 1; i < turning.size(); ++i) {
    if (turning[i] > turning[i - 1]) total += turning[i] - turning[i - 1];
  }
  return 2.0 * total;
}

}  // namespace

TEST_CASE("monotone decay has no measure") {
  const std::vector<double> v{1.0, 0.9, 0.5, 0.5, 0.1};
  const auto r = measure(v);
  CHECK(r.value == 0.0);
  CHECK(r.segments.empty());
  CHECK(r.horizon == 4);
}

TEST_CASE("hand example") {
  const std::vector<double> v{1.0, 0.5, 0.8, 0.3, 0.6};
  const auto r = measure(v);
  CHECK(std::abs(r.value - 1.2) < 1e-12);
  REQUIRE(r.segments.size() == 2);
  CHECK(r.segments[0].t_start == 1);
  CHECK(r.segments[0].t_end == 2);
  CHECK(r.segments[0].rise == doctest::Approx(0.3));
  CHECK(r.segments[1].t_start == 3);
  CHECK(r.segments[1].t_end == 4);

  const auto prefix = measure_vs_time(v);
  const std::vector<double> expected{0, 0, 0.6, 0.6, 1.2};
  REQUIRE(prefix.size() == expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) {
    CHECK(prefix[t].first == static_cast<int>(t));
    CHECK(std::abs(prefix[t].second - expected[t]) < 1e-12);
  }
}

TEST_CASE("constant series") {
  const std::vector<double> v(30, 1.0);
  CHECK(measure(v).value == 0.0);
  for (const auto& [t, value] : measure_vs_time(v)) CHECK(value == 0.0);
  const auto stats = fluctuation_stats(v, 0, 30);
  CHECK(stats.mean == 1.0);
  CHECK(stats.variance == 0.0);
  for (std::size_t k = 1; k < stats.power.size(); ++k) CHECK(stats.power[k] == 0.0);
  CHECK(stats.histogram.back() == 30);
  CHECK_THROWS_AS(measure(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("plateaus break segments and add nothing") {
  const std::vector<double> v{0.2, 0.4, 0.4, 0.7, 0.1};
  const auto r = measure(v);
  CHECK(r.value == doctest::Approx(2 * 0.5));
  CHECK(r.segments.size() == 2);
}

TEST_CASE("increments agree with the extrema formulation on random sequences") {
  Gen gen(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto v = gen.moduli(gen.integer(2, 120));
    const auto r = measure(v);
    CHECK(std::abs(r.value - extrema_measure(v)) < 1e-12);

    double rises = 0.0;
    int last_end = -1;
    for (const auto& seg : r.segments) {
      CHECK(seg.rise > 0.0);
      CHECK(seg.t_start < seg.t_end);
      CHECK(seg.t_start >= last_end);
      CHECK(std::abs(seg.rise - (v[seg.t_end] - v[seg.t_start])) < 1e-12);
      last_end = seg.t_end;
      rises += seg.rise;
    }
    CHECK(std::abs(r.value - 2.0 * rises) < 1e-12);

    const auto prefix = measure_vs_time(v);
    CHECK(std::abs(prefix.back().second - r.value) < 1e-12);
    for (std::size_t t = 1; t < prefix.size(); ++t) CHECK(prefix[t].second >= prefix[t - 1].second);
  }
}

TEST_CASE("sinusoid has a single spectral peak") {
  std::vector<double> v(100);
  for (int t = 0; t < 100; ++t) v[t] = 0.5 + 0.1 * std::cos(2 * std::numbers::pi * t / 16.0);
  const auto stats = fluctuation_stats(v, 10, 74);
  REQUIRE(stats.power.size() == 33);
  const auto peak = std::max_element(stats.power.begin(), stats.power.end()) - stats.power.begin();
  CHECK(stats.frequencies[peak] == doctest::Approx(1.0 / 16));
  // A bin-centred sinusoid puts everything in one bin: |X_k|^2/L = (0.05 L)^2/L.
  CHECK(stats.power[peak] == doctest::Approx(0.05 * 0.05 * 64));
  for (std::size_t k = 0; k < stats.power.size(); ++k) {
    if (static_cast<long>(k) != peak) CHECK(stats.power[k] < 1e-20);
  }
  CHECK(stats.mean == doctest::Approx(0.5));
  CHECK(stats.variance == doctest::Approx(0.005));
}

TEST_CASE("fluctuation window and histogram") {
  Gen gen(52);
  const auto v = gen.moduli(200);
  for (int trial = 0; trial < 50; ++trial) {
    const int t0 = gen.integer(0, 198);
    const int t1 = gen.integer(t0 + 1, 200);
    const auto stats = fluctuation_stats(v, t0, t1, 7);
    CHECK(std::accumulate(stats.histogram.begin(), stats.histogram.end(), std::size_t{0}) ==
          static_cast<std::size_t>(t1 - t0));
    CHECK(stats.histogram.size() == 7);
    CHECK(stats.variance >= 0.0);
    // Parseval: the power over all bins is the window variance times L.
    double total = 0;
    const std::size_t len = static_cast<std::size_t>(t1 - t0);
    for (std::size_t k = 0; k < stats.power.size(); ++k) {
      const bool mirrored = k > 0 && 2 * k != len;
      total += stats.power[k] * (mirrored ? 2.0 : 1.0);
    }
    CHECK(total == doctest::Approx(stats.variance * static_cast<double>(len)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(fluctuation_stats(v, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(fluctuation_stats(v, -1, 5), std::invalid_argument);
  CHECK_THROWS_AS(fluctuation_stats(v, 0, 201), std::invalid_argument);
}

TEST_CASE("unperturbed series has unit mean and no measure") {
  const auto s = fidelity_trace(make_pair(standard_map(HilbertDim(64), 1.0), 0.0), 50);
  CHECK(measure(s).value < 1e-12);
  const auto stats = fluctuation_stats(s, 0, 51);
  CHECK(stats.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(stats.variance < 1e-20);
}

TEST_CASE("mixed measure grows linearly for a chaotic standard map") {
  const auto s = fidelity_trace(make_pair_dkh(standard_map(HilbertDim(256), 10.0), 2.0), 2000);
  const auto prefix = measure_vs_time(s);
  std::vector<double> t, y;
  for (int i = 500; i <= 2000; ++i) {
    t.push_back(i);
    y.push_back(prefix[static_cast<std::size_t>(i)].second);
  }
  const double n = static_cast<double>(t.size());
  const double mt = std::accumulate(t.begin(), t.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sxy += (t[i] - mt) * (y[i] - my);
    sxx += (t[i] - mt) * (t[i] - mt);
  }
  const double slope = sxy / sxx;
  // Largest pointwise deviation from the least-squares line.
  double worst = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - (my + slope * (t[i] - mt))));
  }
  const double range = y.back() - y.front();
  CHECK(slope > 0.0);
  CHECK(worst < 0.05 * range);
}
