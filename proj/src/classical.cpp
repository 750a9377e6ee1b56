#include "torus_echo/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "torus_echo/parallel.hpp"

namespace torus_echo {

using std::numbers::pi;

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_counts(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("classical: counts must be >= 1");
}

// p_to - p_from on the plane, turns and fractions differenced separately.
double momentum_shift(const ClassicalState& from, const ClassicalState& to) {
  return static_cast<double>(to.p_turns - from.p_turns) + (to.p - from.p);
}

std::vector<ClassicalState> stratified_initial(int orbits, std::uint64_t seed, bool wrapped) {
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(orbits))));
  std::vector<ClassicalState> out;
  out.reserve(static_cast<std::size_t>(orbits));
  for (int i = 0; i < orbits; ++i) {
    std::mt19937_64 rng(splitmix64(seed + static_cast<std::uint64_t>(i)));
    const double x = ((i % side) + unit_uniform(rng)) / side;
    const double p = ((i / side) + unit_uniform(rng)) / side;
    out.push_back(normalized({x, p, wrapped}));
  }
  return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

constexpr double kLattice = 0x1.0p52;

// A real number as whole turns plus a lattice fraction in [0, 1).
struct Split {
  std::int64_t turns;
  double frac;
};

Split split(double v) {
  const double whole = std::floor(v);
  double frac = std::nearbyint((v - whole) * kLattice) / kLattice;
  auto turns = static_cast<std::int64_t>(whole);
  if (frac >= 1.0) {
    frac = 0.0;
    ++turns;
  }
  return {turns, frac};
}

// Both fractions on the lattice, so every sum and difference below is exact.
void add(std::int64_t& turns, double& frac, Split d) {
  frac += d.frac;
  turns += d.turns;
  if (frac >= 1.0) {
    frac -= 1.0;
    ++turns;
  }
}

void sub(std::int64_t& turns, double& frac, Split d) {
  frac -= d.frac;
  turns -= d.turns;
  if (frac < 0.0) {
    frac += 1.0;
    --turns;
  }
}

Split kick(const ClassicalMap& map, double x) {
  if (map.family == MapFamily::Standard) return split(map.k / (2.0 * pi) * std::sin(2.0 * pi * x));
  return split(-map.k * std::sin(2.0 * pi * x));
}

ClassicalState finish(ClassicalState s) {
  if (s.wrapped) s.x_turns = s.p_turns = 0;
  return s;
}

}  // namespace

ClassicalState normalized(ClassicalState s) {
  const Split x = split(s.x);
  const Split p = split(s.p);
  s.x = x.frac;
  s.p = p.frac;
  s.x_turns += x.turns;
  s.p_turns += p.turns;
  return finish(s);
}

ClassicalState step_classical(const ClassicalMap& map, ClassicalState s) {
  s = normalized(s);
  add(s.p_turns, s.p, kick(map, s.x));
  if (map.family == MapFamily::Standard) {
    add(s.x_turns, s.x, {s.p_turns, s.p});
  } else {
    add(s.x_turns, s.x, split(map.k2 * std::sin(2.0 * pi * s.p)));
  }
  return finish(s);
}

ClassicalState inverse_step_classical(const ClassicalMap& map, ClassicalState s) {
  s = normalized(s);
  if (map.family == MapFamily::Standard) {
    sub(s.x_turns, s.x, {s.p_turns, s.p});
  } else {
    sub(s.x_turns, s.x, split(map.k2 * std::sin(2.0 * pi * s.p)));
  }
  sub(s.p_turns, s.p, kick(map, s.x));
  return finish(s);
}

std::vector<PortraitPoint> phase_portrait(const ClassicalMap& map, int orbits, int steps,
                                          std::uint64_t seed) {
  check_counts(orbits, steps);
  std::vector<PortraitPoint> points;
  points.reserve(static_cast<std::size_t>(orbits) * (static_cast<std::size_t>(steps) + 1));
  for (ClassicalState s : stratified_initial(orbits, seed, true)) {
    points.push_back({s.x, s.p});
    for (int t = 0; t < steps; ++t) {
      s = step_classical(map, s);
      points.push_back({s.x, s.p});
    }
  }
  return points;
}

std::vector<double> momentum_excursions(const ClassicalMap& map, int orbits, int steps,
                                        std::uint64_t seed) {
  check_counts(orbits, steps);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(orbits));
  for (ClassicalState s : stratified_initial(orbits, seed, false)) {
    s = normalized(s);
    const ClassicalState s0 = s;
    double widest = 0.0;
    for (int t = 0; t < steps; ++t) {
      s = step_classical(map, s);
      widest = std::max(widest, std::abs(momentum_shift(s0, s)));
    }
    out.push_back(widest);
  }
  return out;
}

TrajectoryStats diffusion_coefficient(const ClassicalMap& map, int orbits, int horizon,
                                      std::uint64_t seed, int threads) {
  check_counts(orbits, horizon);
  std::vector<double> spread(static_cast<std::size_t>(orbits));
  parallel_for(spread.size(), threads, [&](std::size_t i) {
    std::mt19937_64 rng(splitmix64(seed + i));
    ClassicalState s = normalized({unit_uniform(rng), unit_uniform(rng), false});
    const ClassicalState s0 = s;
    for (int t = 0; t < horizon; ++t) s = step_classical(map, s);
    const double shift = momentum_shift(s0, s);
    spread[i] = shift * shift;
  });
  double sum = 0.0;
  for (double v : spread) sum += v;
  return {sum / orbits / horizon, orbits, horizon};
}

double classical_nm(const ClassicalMap& map, double delta_k, ClassicalState initial,
                    int horizon) {
  if (horizon < 1) throw std::invalid_argument("classical_nm: T must be >= 1");
  ClassicalMap perturbed = map;
  if (map.family == MapFamily::Standard) {
    perturbed.k += delta_k;
  } else {
    perturbed.k2 += delta_k;
  }
  initial.wrapped = false;
  ClassicalState a = initial;
  ClassicalState b = initial;
  double previous = 1.0;
  double total = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    a = step_classical(map, a);
    b = step_classical(perturbed, b);
    const double dx = static_cast<double>(a.x_turns - b.x_turns) + (a.x - b.x);
    const double dp = momentum_shift(b, a);
    const double f = std::exp(-std::hypot(dx, dp));
    if (f > previous) total += f - previous;
    previous = f;
  }
  return total;
}

double classical_nm_grid(const ClassicalMap& map, double delta_k, int side, int horizon,
                         int threads) {
  check_counts(side, horizon);
  const auto cells = static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
  std::vector<double> values(cells);
  parallel_for(cells, threads, [&](std::size_t cell) {
    const double x = (static_cast<double>(cell % side) + 0.5) / side;
    const double p = (static_cast<double>(cell / side) + 0.5) / side;
    values[cell] = classical_nm(map, delta_k, {x, p, false}, horizon);
  });
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(cells);
}

}  // namespace torus_echo
