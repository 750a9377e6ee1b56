#include "torus_echo/kicked_maps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace torus_echo {

using std::numbers::pi;

void check_matrix_guard(int n) {
  if (n > kMatrixGuard) {
    throw GuardError("matrix-guard", "N = " + std::to_string(n) +
                                         " exceeds the dense-matrix guard N <= " +
                                         std::to_string(kMatrixGuard));
  }
}

const char* family_name(MapFamily family) {
  return family == MapFamily::Standard ? "sm" : "hm";
}

MapFamily parse_family(const std::string& text) {
  if (text == "sm" || text == "standard") return MapFamily::Standard;
  if (text == "hm" || text == "harper") return MapFamily::Harper;
  throw std::invalid_argument("unknown map family '" + text + "' (expected sm or hm)");
}

namespace {

void validate(const MapSpec& spec) {
  if (!std::isfinite(spec.k) || spec.k < 0.0) {
    throw std::invalid_argument("MapSpec: K must be finite and non-negative");
  }
  if (!std::isfinite(spec.k2) || spec.k2 < 0.0) {
    throw std::invalid_argument("MapSpec: K2 must be finite and non-negative");
  }
}

}  // namespace

MapSpec standard_map(HilbertDim dim, double k) {
  MapSpec spec{MapFamily::Standard, k, 0.0, dim, false};
  validate(spec);
  return spec;
}

MapSpec harper_map(HilbertDim dim, double k1, double k2) {
  MapSpec spec{MapFamily::Harper, k1, k2, dim, false};
  validate(spec);
  return spec;
}

double kick_phase_scale(MapFamily family, HilbertDim dim) {
  const double n = dim.n();
  return family == MapFamily::Standard ? n / (2.0 * pi) : n;
}

double PerturbedPair::dkh() const { return delta_k * kick_phase_scale(u0.family, u0.dim); }

PerturbedPair make_pair(const MapSpec& base, double delta_k) {
  validate(base);
  if (!std::isfinite(delta_k)) throw std::invalid_argument("make_pair: deltaK must be finite");
  MapSpec perturbed = base;
  if (base.family == MapFamily::Standard) {
    perturbed.k = base.k + delta_k;
  } else {
    perturbed.k2 = base.k2 + delta_k;
  }
  // Negative shifted strengths are allowed here: only the phase matters and
  // the echo operator depends on delta_k alone.
  return PerturbedPair{base, perturbed, delta_k};
}

PerturbedPair make_pair_dkh(const MapSpec& base, double dkh) {
  return make_pair(base, dkh / kick_phase_scale(base.family, base.dim));
}

Propagator::Propagator(const MapSpec& spec)
    : fft_(spec.dim.n()),
      position_phase_(static_cast<std::size_t>(spec.dim.n())),
      momentum_phase_(static_cast<std::size_t>(spec.dim.n())) {
  const int n = spec.dim.n();
  const double nd = n;
  const double strength = spec.k * kick_phase_scale(spec.family, spec.dim);
  const double strength2 = spec.k2 * kick_phase_scale(spec.family, spec.dim);

  for (int site = 0; site < n; ++site) {
    const double c = std::cos(2.0 * pi * site / nd);
    // SM: V = K/(4 pi^2) cos(2 pi q); HM: V = -K/(2 pi) cos(2 pi q).
    const double phase = spec.family == MapFamily::Standard ? -strength * c : strength * c;
    position_phase_[static_cast<std::size_t>(site)] = std::polar(1.0, phase);
  }
  for (int k = 0; k < n; ++k) {
    double phase;
    if (spec.family == MapFamily::Standard) {
      // p^2/(2 hbar) = pi k^2 / N; reduce k^2 mod 2N before the multiply
      // to keep the argument small for large N.
      long long kk = (spec.centered_momentum && k >= n / 2) ? k - n : k;
      const long long two_n = 2LL * n;
      const long long reduced = ((kk * kk) % two_n + two_n) % two_n;
      phase = -pi * static_cast<double>(reduced) / nd;
    } else {
      phase = strength2 * std::cos(2.0 * pi * k / nd);
    }
    momentum_phase_[static_cast<std::size_t>(k)] = std::polar(1.0 / nd, phase);
  }
}

void Propagator::step(std::span<cplx> amps) const {
  const std::size_t n = position_phase_.size();
  for (std::size_t i = 0; i < n; ++i) amps[i] *= position_phase_[i];
  fft_.forward(amps);
  for (std::size_t i = 0; i < n; ++i) amps[i] *= momentum_phase_[i];
  fft_.backward(amps);
}

TorusState apply_map(const MapSpec& spec, const TorusState& state) {
  if (state.basis() != Basis::Position) {
    throw std::invalid_argument("apply_map: state must be in the position representation");
  }
  if (!(state.dim() == spec.dim)) throw std::invalid_argument("apply_map: dimension mismatch");
  std::vector<cplx> amps(state.amps().begin(), state.amps().end());
  Propagator(spec).step(amps);
  return TorusState(spec.dim, std::move(amps));
}

Eigen::MatrixXcd build_matrix(const MapSpec& spec) {
  const int n = spec.dim.n();
  check_matrix_guard(n);
  const Propagator prop(spec);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    prop.step(std::span<cplx>(u.col(j).data(), static_cast<std::size_t>(n)));
  }
  return u;
}

}  // namespace torus_echo
