#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "torus_echo/torus_state.hpp"

namespace torus_echo::testing {

// Small hand-rolled generators for property tests. Every test builds its own
// generator from a fixed seed so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>()(rng_); }

  std::vector<cplx> complex_vector(int n) {
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (auto& z : v) z = {normal(), normal()};
    return v;
  }

  TorusState state(int n) { return TorusState::normalized(HilbertDim(n), complex_vector(n)); }

  // Random non-negative sequence in [0, 1], with occasional repeated values
  // so plateaus are exercised too.
  std::vector<double> moduli(int length) {
    std::vector<double> v(static_cast<std::size_t>(length));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && uniform() < 0.15) {
        v[i] = v[i - 1];
      } else {
        v[i] = uniform();
      }
    }
    return v;
  }

  // Random 2x2 density matrix: a mixture of a random pure state and the
  // maximally mixed one.
  Eigen::Matrix2cd density() {
    Eigen::Vector2cd psi(cplx(normal(), normal()), cplx(normal(), normal()));
    psi.normalize();
    const double w = uniform();
    return w * psi * psi.adjoint() + (1.0 - w) * 0.5 * Eigen::Matrix2cd::Identity();
  }

  Eigen::Matrix2cd unitary() {
    const double a = uniform(0, 2 * std::numbers::pi);
    const double b = uniform(0, 2 * std::numbers::pi);
    const double c = uniform(0, 2 * std::numbers::pi);
    const double th = uniform(0, std::numbers::pi);
    const cplx i(0, 1);
    Eigen::Matrix2cd u;
    u << std::exp(i * a) * std::cos(th), std::exp(i * b) * std::sin(th),
        -std::exp(i * (c - b)) * std::sin(th), std::exp(i * (c - a)) * std::cos(th);
    return u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Eigen::VectorXcd to_eigen(const TorusState& s) {
  Eigen::VectorXcd v(s.dim().n());
  for (int i = 0; i < v.size(); ++i) v(i) = s[static_cast<std::size_t>(i)];
  return v;
}

// Unitary DFT matrix with kernel exp(-2 pi i n k / N) / sqrt(N), built
// entry by entry.
inline Eigen::MatrixXcd dft_matrix(int n) {
  Eigen::MatrixXcd f(n, n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(j) * k) % n) / n;
      f(k, j) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), angle);
    }
  }
  return f;
}

}  // namespace torus_echo::testing
