#pragma once

#include <cstdint>
#include <vector>

#include "torus_echo/kicked_maps.hpp"

namespace torus_echo {

/// Classical phase-space point. x and p hold the fractional parts in
/// [0, 1), kept on the 2^-52 lattice so that additions are exact; the whole
/// turns are counted separately. A state built with coordinates outside
/// [0, 1) is folded on the first step. When `wrapped`, the turn counters
/// stay at zero (the torus); otherwise they track the plane.
struct ClassicalState {
  double x = 0.0;
  double p = 0.0;
  bool wrapped = true;
  std::int64_t x_turns = 0;
  std::int64_t p_turns = 0;

  double plane_x() const { return static_cast<double>(x_turns) + x; }
  double plane_p() const { return static_cast<double>(p_turns) + p; }
};

/// Fold turns and quantize; a no-op for states returned by the steppers.
ClassicalState normalized(ClassicalState s);

/// Classical kicked-map parameters; `k2` is only read for the Harper map.
struct ClassicalMap {
  MapFamily family = MapFamily::Standard;
  double k = 0.0;
  double k2 = 0.0;
};

/// SM: p' = p + K/(2 pi) sin(2 pi x), x' = x + p'.
/// HM: p' = p - K sin(2 pi x),        x' = x + K2 sin(2 pi p').
ClassicalState step_classical(const ClassicalMap& map, ClassicalState s);
/// Inverse of step_classical, exact on normalized states.
ClassicalState inverse_step_classical(const ClassicalMap& map, ClassicalState s);

struct PortraitPoint {
  double x = 0.0;
  double p = 0.0;
};

/// `orbits` stratified random initial conditions (one per cell of a
/// ceil(sqrt(orbits))^2 grid, jittered) iterated `steps` times on the torus.
/// Returns every visited point, initial conditions included.
std::vector<PortraitPoint> phase_portrait(const ClassicalMap& map, int orbits, int steps,
                                          std::uint64_t seed);

/// Largest |p_t - p_0| along each plane orbit started from the same initial
/// conditions phase_portrait would use.
std::vector<double> momentum_excursions(const ClassicalMap& map, int orbits, int steps,
                                        std::uint64_t seed);

struct TrajectoryStats {
  double diffusion = 0.0;
  int samples = 0;
  int horizon = 0;
};

/// D = <(p_t - p_0)^2> / t at t = horizon, plane dynamics, initial
/// conditions uniform on the unit torus. Orbit i draws from a generator
/// seeded with splitmix64(seed + i).
TrajectoryStats diffusion_coefficient(const ClassicalMap& map, int orbits, int horizon,
                                      std::uint64_t seed, int threads = 1);

/// Classical analogue of the pure-state measure: plane trajectories of the
/// map and of its perturbation (K + dK for SM, K2 + dK for HM) from the
/// same initial point, d_t = |(x_t, p_t) - (x'_t, p'_t)|, f_t = exp(-d_t),
/// result = sum of positive increments of f_t over t = 1..T.
double classical_nm(const ClassicalMap& map, double delta_k, ClassicalState initial, int horizon);

/// Mean of classical_nm over the side x side grid of initial conditions
/// ((i + 1/2)/side, (j + 1/2)/side).
double classical_nm_grid(const ClassicalMap& map, double delta_k, int side, int horizon,
                         int threads = 1);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace torus_echo
