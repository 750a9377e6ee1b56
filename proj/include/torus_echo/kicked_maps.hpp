#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "torus_echo/errors.hpp"
#include "torus_echo/fft.hpp"
#include "torus_echo/torus_state.hpp"

namespace torus_echo {

enum class MapFamily { Standard, Harper };

const char* family_name(MapFamily family);
/// Accepts "sm"/"standard" and "hm"/"harper"; throws std::invalid_argument.
MapFamily parse_family(const std::string& text);

/// One-kick quantum map U = T(p) V(q).
///
/// Kick strengths use the classical normalization: the quantum standard map
/// has p' = p + K/(2 pi) sin(2 pi x), x' = x + p' as its classical limit, the
/// Harper map p' = p - K sin(2 pi x), x' = x + K2 sin(2 pi p'). `k2` is only
/// read for the Harper map.
struct MapSpec {
  MapFamily family = MapFamily::Standard;
  double k = 0.0;
  double k2 = 0.0;
  HilbertDim dim{2};
  /// Use k in [-N/2, N/2) for the standard-map drift instead of [0, N).
  bool centered_momentum = false;
};

MapSpec standard_map(HilbertDim dim, double k);
MapSpec harper_map(HilbertDim dim, double k1, double k2);

/// Phase amplitude (radians) contributed per unit of the perturbed kick
/// strength: N/(2 pi) for the standard map, N for the Harper map.
double kick_phase_scale(MapFamily family, HilbertDim dim);

/// Unperturbed map u0 and perturbed map u1. The perturbation shifts K for
/// the standard map and K2 for the Harper map.
struct PerturbedPair {
  MapSpec u0;
  MapSpec u1;
  double delta_k = 0.0;

  /// Phase amplitude of the echo operator U1^dag U0 after one kick, the
  /// quantity reported as deltaK/hbar.
  double dkh() const;
};

PerturbedPair make_pair(const MapSpec& base, double delta_k);
/// Pair whose echo operator has phase amplitude `dkh`.
PerturbedPair make_pair_dkh(const MapSpec& base, double dkh);

/// Precomputed diagonal phases of one map; `step` applies one kick in place
/// to a position-representation vector. Immutable after construction and
/// safe to share between threads.
class Propagator {
 public:
  explicit Propagator(const MapSpec& spec);

  int size() const { return fft_.size(); }
  void step(std::span<cplx> amps) const;

  std::span<const cplx> position_phase() const { return position_phase_; }
  /// Includes the 1/N normalization of the unnormalized transform pair.
  std::span<const cplx> momentum_phase() const { return momentum_phase_; }

 private:
  Fft fft_;
  std::vector<cplx> position_phase_;
  std::vector<cplx> momentum_phase_;
};

/// One kick applied to a position-representation state.
TorusState apply_map(const MapSpec& spec, const TorusState& state);

/// Dense unitary whose column j is apply_map(spec, e_j).
Eigen::MatrixXcd build_matrix(const MapSpec& spec);

}  // namespace torus_echo
