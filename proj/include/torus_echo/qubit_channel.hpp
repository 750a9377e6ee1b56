#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "torus_echo/echo_engine.hpp"

namespace torus_echo {

/// 2x2 density matrix, validated on construction (Hermitian, unit trace,
/// eigenvalues >= -1e-12).
class QubitState {
 public:
  explicit QubitState(const Eigen::Matrix2cd& rho);

  static QubitState from_bloch(double x, double y, double z);
  /// Pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static QubitState pure(double theta, double phi);

  const Eigen::Matrix2cd& matrix() const { return rho_; }
  Eigen::Vector3d bloch() const;

 private:
  Eigen::Matrix2cd rho_;
};

/// Pure-dephasing channel at one instant: populations are kept, the
/// coherence rho_01 is multiplied by f.
struct DephasingChannel {
  explicit DephasingChannel(cplx f);
  cplx f;
};

QubitState apply_channel(const DephasingChannel& channel, const QubitState& rho);

/// D(a, b) = Tr|a - b| / 2.
double trace_distance(const QubitState& a, const QubitState& b);

/// Monte-Carlo BLP measure: for `pairs` random orthogonal pure-state pairs
/// (first state uniform on the Bloch sphere) the positive increments of the
/// distinguishability between consecutive kicks are summed and the maximum
/// over pairs is returned.
///
/// Distinguishability is Tr|rho1 - rho2| = 2 D, the normalization in which
/// the closed-form measure of nm_measures is expressed, so the two are
/// directly comparable. Sampling uses std::mt19937_64 seeded with `seed`;
/// each uniform variate is the top 53 bits of one draw scaled by 2^-53.
double blp_sampled(const FidelitySeries& series, int pairs, std::uint64_t seed);

}  // namespace torus_echo
