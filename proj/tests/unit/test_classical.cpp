#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "torus_echo/classical.hpp"

using namespace torus_echo;
using torus_echo::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

// Distance on the circle between two coordinates.
double circle_gap(double a, double b) {
  const double d = std::abs(wrap_unit(a) - wrap_unit(b));
  return std::min(d, 1.0 - d);
}

}  // namespace

TEST_CASE("single steps") {
  const ClassicalMap free{MapFamily::Standard, 0.0, 0.0};
  const auto a = step_classical(free, {0.2, 0.3, true});
  CHECK(a.x == doctest::Approx(0.5));
  CHECK(a.p == doctest::Approx(0.3));

  const auto b = step_classical({MapFamily::Standard, 1.0, 0.0}, {0.25, 0.0, true});
  CHECK(b.p == doctest::Approx(0.1591549).epsilon(1e-7));
  CHECK(b.x == doctest::Approx(0.4091549).epsilon(1e-7));
  CHECK(b.p == doctest::Approx(1.0 / (2 * kPi)).epsilon(1e-15));

  const auto c = step_classical({MapFamily::Harper, 0.0, 0.0}, {0.7, 0.1, true});
  CHECK(c.x == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(c.p == doctest::Approx(0.1).epsilon(1e-15));

  // HM: p' = p - K sin(2 pi x), x' = x + K2 sin(2 pi p').
  const auto d = step_classical({MapFamily::Harper, 0.1, 0.2}, {0.25, 0.5, false});
  CHECK(d.p == doctest::Approx(0.4));
  CHECK(d.x == doctest::Approx(0.25 + 0.2 * std::sin(2 * kPi * 0.4)));
}

TEST_CASE("wrapped steps stay on the unit torus") {
  Gen gen(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const ClassicalMap map{gen.uniform() < 0.5 ? MapFamily::Standard : MapFamily::Harper,
                           gen.uniform(0, 5), gen.uniform(0, 5)};
    auto s = step_classical(map, {gen.uniform(), gen.uniform(), true});
    CHECK(s.x >= 0.0);
    CHECK(s.x < 1.0);
    CHECK(s.p >= 0.0);
    CHECK(s.p < 1.0);
  }
}

TEST_CASE("fixed point at the origin") {
  for (double k : {0.3, 0.98, 2.5, 7.0}) {
    const ClassicalMap map{MapFamily::Standard, k, 0.0};
    auto s = ClassicalState{0.0, 0.0, false};
    for (int t = 0; t < 100; ++t) s = step_classical(map, s);
    CHECK(s.x == 0.0);
    CHECK(s.p == 0.0);
  }
}

TEST_CASE("torus and plane trajectories agree modulo one") {
  Gen gen(62);
  SUBCASE("regular standard map up to 10^4 steps") {
    for (int trial = 0; trial < 10; ++trial) {
      const ClassicalMap map{MapFamily::Standard, gen.uniform(0, 0.5), 0.0};
      ClassicalState torus{gen.uniform(), gen.uniform(), true};
      ClassicalState plane{torus.x, torus.p, false};
      double worst = 0;
      for (int t = 0; t < 10000; ++t) {
        torus = step_classical(map, torus);
        plane = step_classical(map, plane);
        worst = std::max({worst, circle_gap(torus.x, plane.plane_x()), circle_gap(torus.p, plane.plane_p())});
      }
      CHECK(worst < 1e-9);
    }
  }
  SUBCASE("chaotic standard map up to 10^4 steps") {
    for (int trial = 0; trial < 10; ++trial) {
      const ClassicalMap map{MapFamily::Standard, gen.uniform(1.5, 5), 0.0};
      ClassicalState torus{gen.uniform(), gen.uniform(), true};
      ClassicalState plane{torus.x, torus.p, false};
      double worst = 0;
      for (int t = 0; t < 10000; ++t) {
        torus = step_classical(map, torus);
        plane = step_classical(map, plane);
        worst = std::max({worst, circle_gap(torus.x, plane.plane_x()), circle_gap(torus.p, plane.plane_p())});
      }
      CHECK(worst < 1e-9);
    }
  }
  SUBCASE("any map over short orbits") {
    for (int trial = 0; trial < 50; ++trial) {
      const ClassicalMap map{gen.uniform() < 0.5 ? MapFamily::Standard : MapFamily::Harper,
                             gen.uniform(0, 3), gen.uniform(0, 3)};
      ClassicalState torus{gen.uniform(), gen.uniform(), true};
      ClassicalState plane{torus.x, torus.p, false};
      for (int t = 0; t < 5; ++t) {
        torus = step_classical(map, torus);
        plane = step_classical(map, plane);
        CHECK(circle_gap(torus.x, plane.plane_x()) < 1e-9);
        CHECK(circle_gap(torus.p, plane.plane_p()) < 1e-9);
      }
    }
  }
}

TEST_CASE("inverse step undoes a step") {
  Gen gen(63);
  for (int trial = 0; trial < 1000; ++trial) {
    const ClassicalMap map{gen.uniform() < 0.5 ? MapFamily::Standard : MapFamily::Harper,
                           gen.uniform(0, 5), gen.uniform(0, 5)};
    const ClassicalState s0{gen.uniform(), gen.uniform(), false};
    const auto back = inverse_step_classical(map, step_classical(map, s0));
    CHECK(std::abs(back.plane_x() - s0.x) < 1e-12);
    CHECK(std::abs(back.plane_p() - s0.p) < 1e-12);
    // Exact on normalized states.
    const auto n0 = normalized(s0);
    const auto again = inverse_step_classical(map, step_classical(map, n0));
    CHECK(again.x == n0.x);
    CHECK(again.p == n0.p);
    CHECK(again.x_turns == n0.x_turns);
    CHECK(again.p_turns == n0.p_turns);
  }
}

TEST_CASE("standard map is reversible over 100 steps") {
  Gen gen(64);
  for (double k : {0.2, 0.5, 0.9, 2.5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ClassicalMap map{MapFamily::Standard, k, 0.0};
      const ClassicalState s0{gen.uniform(), gen.uniform(), false};
      auto s = s0;
      for (int t = 0; t < 100; ++t) s = step_classical(map, s);
      for (int t = 0; t < 100; ++t) s = inverse_step_classical(map, s);
      CHECK(std::abs(s.plane_x() - s0.x) < 1e-10);
      CHECK(std::abs(s.plane_p() - s0.p) < 1e-10);
    }
  }
}

TEST_CASE("plane coordinates fold into turns") {
  const auto s = normalized({2.25, -0.75, false});
  CHECK(s.x == 0.25);
  CHECK(s.x_turns == 2);
  CHECK(s.p == 0.25);
  CHECK(s.p_turns == -1);
  CHECK(s.plane_p() == -0.75);
  const auto t = normalized({2.25, -0.75, true});
  CHECK(t.x_turns == 0);
  CHECK(t.p_turns == 0);

  // Free motion with p = 0.5 advances x by half a turn per step.
  auto free = ClassicalState{0.0, 0.5, false};
  for (int i = 0; i < 6; ++i) free = step_classical({MapFamily::Standard, 0.0, 0.0}, free);
  CHECK(free.plane_x() == 3.0);
}

TEST_CASE("phase portraits") {
  const auto free = phase_portrait({MapFamily::Standard, 0.0, 0.0}, 25, 40, 3);
  REQUIRE(free.size() == 25 * 41);
  for (int orbit = 0; orbit < 25; ++orbit) {
    for (int t = 1; t <= 40; ++t) CHECK(free[orbit * 41 + t].p == free[orbit * 41].p);
  }
  for (const auto& pt : free) {
    CHECK(pt.x >= 0.0);
    CHECK(pt.x < 1.0);
  }

  // Initial conditions are stratified: one per cell of the 5 x 5 grid.
  std::vector<int> cells(25, 0);
  for (int orbit = 0; orbit < 25; ++orbit) {
    const auto& pt = free[orbit * 41];
    ++cells[static_cast<int>(pt.p * 5) * 5 + static_cast<int>(pt.x * 5)];
  }
  for (int c : cells) CHECK(c == 1);

  CHECK(phase_portrait({MapFamily::Standard, 0.9, 0.0}, 10, 10, 5)[37].x ==
        phase_portrait({MapFamily::Standard, 0.9, 0.0}, 10, 10, 5)[37].x);
  CHECK_THROWS_AS(phase_portrait({MapFamily::Standard, 0.9, 0.0}, 0, 10, 5), std::invalid_argument);
}

TEST_CASE("bounded versus unbounded momentum") {
  const auto regular = momentum_excursions({MapFamily::Standard, 0.5, 0.0}, 400, 5000, 1);
  const auto bounded = std::count_if(regular.begin(), regular.end(), [](double e) { return e < 1.0; });
  CHECK(bounded > 200);

  const auto chaotic = momentum_excursions({MapFamily::Standard, 2.5, 0.0}, 400, 5000, 1);
  const auto unbounded = std::count_if(chaotic.begin(), chaotic.end(), [](double e) { return e > 1.0; });
  CHECK(unbounded > 200);
}

TEST_CASE("diffusion coefficient") {
  const ClassicalMap regular{MapFamily::Standard, 0.5, 0.0};
  const ClassicalMap chaotic{MapFamily::Standard, 2.5, 0.0};
  const auto d_regular = diffusion_coefficient(regular, 4000, 16000, 1, 4);
  CHECK(d_regular.diffusion >= 0.0);
  CHECK(d_regular.diffusion < 1e-3);
  CHECK(d_regular.samples == 4000);
  CHECK(d_regular.horizon == 16000);

  const double long_run = diffusion_coefficient(chaotic, 4000, 16000, 1, 4).diffusion;
  const double short_run = diffusion_coefficient(chaotic, 4000, 1000, 1, 4).diffusion;
  CHECK(long_run > 0.01);
  CHECK(long_run / short_run < 2.0);
  CHECK(short_run / long_run < 2.0);

  const double other_seed = diffusion_coefficient(chaotic, 4000, 1000, 99, 4).diffusion;
  CHECK(other_seed / short_run < 2.0);
  CHECK(short_run / other_seed < 2.0);

  const auto harper = diffusion_coefficient({MapFamily::Harper, 0.05, 0.05}, 4000, 16000, 1, 4);
  CHECK(harper.diffusion < 1e-3);

  CHECK(diffusion_coefficient(chaotic, 300, 1000, 5, 1).diffusion ==
        diffusion_coefficient(chaotic, 300, 1000, 5, 3).diffusion);
}

TEST_CASE("classical measure") {
  const ClassicalMap map{MapFamily::Standard, 0.98, 0.0};
  CHECK(classical_nm(map, 0.0, {0.3, 0.4, false}, 2000) == 0.0);
  CHECK(classical_nm(map, 1e-3, {0.0, 0.0, false}, 2000) == 0.0);
  CHECK(classical_nm({MapFamily::Harper, 0.2, 0.2}, 0.0, {0.3, 0.4, false}, 2000) == 0.0);

  Gen gen(65);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalMap m{gen.uniform() < 0.5 ? MapFamily::Standard : MapFamily::Harper,
                         gen.uniform(0, 3), gen.uniform(0, 3)};
    const double v = classical_nm(m, gen.uniform(0, 0.01), {gen.uniform(), gen.uniform(), false}, 500);
    CHECK(v >= 0.0);
    CHECK(std::isfinite(v));
  }
  CHECK(classical_nm_grid(map, 1e-3, 8, 500, 1) == classical_nm_grid(map, 1e-3, 8, 500, 3));
  CHECK_THROWS_AS(classical_nm(map, 1e-3, {0.1, 0.1, false}, 0), std::invalid_argument);
}

TEST_CASE("classical measure by direct evaluation") {
  // d_t from two explicitly iterated plane orbits, f_t = exp(-d_t), sum of
  // positive increments starting from f_0 = 1. Regular orbit, so the plain
  // double iteration here tracks the lattice iteration closely.
  const double k = 0.4, dk = 0.01;
  double x0 = 0.37, p0 = 0.11, x1 = x0, p1 = p0, prev = 1.0, total = 0.0;
  for (int t = 0; t < 300; ++t) {
    p0 += k / (2 * kPi) * std::sin(2 * kPi * x0);
    x0 += p0;
    p1 += (k + dk) / (2 * kPi) * std::sin(2 * kPi * x1);
    x1 += p1;
    const double f = std::exp(-std::sqrt((x0 - x1) * (x0 - x1) + (p0 - p1) * (p0 - p1)));
    total += std::max(0.0, f - prev);
    prev = f;
  }
  CHECK(total > 0.0);
  CHECK(classical_nm({MapFamily::Standard, k, 0.0}, dk, {0.37, 0.11, false}, 300) ==
        doctest::Approx(total).epsilon(1e-9));
}
