#include "torus_echo/qubit_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace torus_echo {

namespace {

constexpr double kTraceTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-12;

// Eigenvalues of a Hermitian 2x2 matrix, ascending.
std::pair<double, double> hermitian_eigenvalues(const Eigen::Matrix2cd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  return {mean - radius, mean + radius};
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

QubitState::QubitState(const Eigen::Matrix2cd& rho) : rho_(rho) {
  if (std::abs(rho_(0, 0).imag()) > kHermitianTolerance ||
      std::abs(rho_(1, 1).imag()) > kHermitianTolerance ||
      std::abs(rho_(0, 1) - std::conj(rho_(1, 0))) > kHermitianTolerance) {
    throw std::invalid_argument("QubitState: matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - cplx(1.0)) > kTraceTolerance) {
    throw std::invalid_argument("QubitState: trace must be 1");
  }
  if (hermitian_eigenvalues(rho_).first < -1e-12) {
    throw std::invalid_argument("QubitState: matrix is not positive semidefinite");
  }
}

QubitState QubitState::from_bloch(double x, double y, double z) {
  Eigen::Matrix2cd rho;
  rho << cplx(0.5 * (1.0 + z)), cplx(0.5 * x, -0.5 * y), cplx(0.5 * x, 0.5 * y),
      cplx(0.5 * (1.0 - z));
  return QubitState(rho);
}

QubitState QubitState::pure(double theta, double phi) {
  return from_bloch(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                    std::cos(theta));
}

Eigen::Vector3d QubitState::bloch() const {
  return {2.0 * rho_(0, 1).real(), -2.0 * rho_(0, 1).imag(),
          (rho_(0, 0) - rho_(1, 1)).real()};
}

DephasingChannel::DephasingChannel(cplx f) : f(f) {
  if (!(std::abs(f) <= 1.0 + 1e-9)) {
    throw std::invalid_argument("DephasingChannel: |f| must not exceed 1");
  }
}

QubitState apply_channel(const DephasingChannel& channel, const QubitState& rho) {
  Eigen::Matrix2cd out = rho.matrix();
  out(0, 1) *= channel.f;
  out(1, 0) *= std::conj(channel.f);
  return QubitState(out);
}

double trace_distance(const QubitState& a, const QubitState& b) {
  const auto [lo, hi] = hermitian_eigenvalues(a.matrix() - b.matrix());
  return 0.5 * (std::abs(lo) + std::abs(hi));
}

double blp_sampled(const FidelitySeries& series, int pairs, std::uint64_t seed) {
  if (pairs < 1) throw std::invalid_argument("blp_sampled: need at least one pair");
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const double cos_theta = 2.0 * unit_uniform(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit_uniform(rng);
    const double theta = std::acos(cos_theta);
    const QubitState first = QubitState::pure(theta, phi);
    const QubitState second = QubitState::pure(std::numbers::pi - theta, phi + std::numbers::pi);

    double previous = 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t < series.values.size(); ++t) {
      const DephasingChannel channel(series.values[t]);
      const double distance =
          2.0 * trace_distance(apply_channel(channel, first), apply_channel(channel, second));
      if (t > 0 && distance > previous) total += distance - previous;
      previous = distance;
    }
    best = std::max(best, total);
  }
  return best;
}

}  // namespace torus_echo
