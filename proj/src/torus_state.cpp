#include "torus_echo/torus_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "torus_echo/fft.hpp"

namespace torus_echo {

namespace {

constexpr double kNormTolerance = 1e-10;

double squared_norm(std::span<const cplx> amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

}  // namespace

HilbertDim::HilbertDim(int n) : n_(n), hbar_(1.0 / (2.0 * std::numbers::pi * n)) {
  if (n < 2) {
    throw std::invalid_argument("HilbertDim: N must be >= 2, got " + std::to_string(n));
  }
}

double wrap_unit(double x) {
  double r = x - std::floor(x);
  // floor can round x - floor(x) up to exactly 1 for tiny negative x
  return r >= 1.0 ? 0.0 : r;
}

PhasePoint PhasePoint::wrapped(double q, double p) { return {wrap_unit(q), wrap_unit(p)}; }

TorusState::TorusState(HilbertDim dim, std::vector<cplx> amps, Basis basis)
    : dim_(dim), amps_(std::move(amps)), basis_(basis) {
  if (static_cast<int>(amps_.size()) != dim_.n()) {
    throw std::invalid_argument("TorusState: amplitude count does not match N");
  }
  if (std::abs(squared_norm(amps_) - 1.0) > kNormTolerance) {
    throw std::invalid_argument("TorusState: amplitudes are not normalized");
  }
}

TorusState::TorusState(Unchecked, HilbertDim dim, std::vector<cplx> amps, Basis basis)
    : dim_(dim), amps_(std::move(amps)), basis_(basis) {}

TorusState TorusState::normalized(HilbertDim dim, std::vector<cplx> amps, Basis basis) {
  if (static_cast<int>(amps.size()) != dim.n()) {
    throw std::invalid_argument("TorusState: amplitude count does not match N");
  }
  const double norm = std::sqrt(squared_norm(amps));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("TorusState: cannot normalize a zero or non-finite vector");
  }
  for (auto& a : amps) a /= norm;
  return TorusState(Unchecked{}, dim, std::move(amps), basis);
}

TorusState TorusState::basis_state(HilbertDim dim, int index, Basis basis) {
  if (index < 0 || index >= dim.n()) {
    throw std::out_of_range("TorusState: basis index out of range");
  }
  std::vector<cplx> amps(static_cast<std::size_t>(dim.n()));
  amps[static_cast<std::size_t>(index)] = 1.0;
  return TorusState(Unchecked{}, dim, std::move(amps), basis);
}

double TorusState::norm() const { return std::sqrt(squared_norm(amps_)); }

TorusState dft(const TorusState& state) {
  if (state.basis() != Basis::Position) {
    throw std::invalid_argument("dft: state must be in the position representation");
  }
  const int n = state.dim().n();
  std::vector<cplx> out(state.amps().begin(), state.amps().end());
  Fft(n).forward(out);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& a : out) a *= scale;
  return TorusState(TorusState::Unchecked{}, state.dim(), std::move(out), Basis::Momentum);
}

TorusState inverse_dft(const TorusState& state) {
  if (state.basis() != Basis::Momentum) {
    throw std::invalid_argument("inverse_dft: state must be in the momentum representation");
  }
  const int n = state.dim().n();
  std::vector<cplx> out(state.amps().begin(), state.amps().end());
  Fft(n).backward(out);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& a : out) a *= scale;
  return TorusState(TorusState::Unchecked{}, state.dim(), std::move(out), Basis::Position);
}

TorusState coherent_state(HilbertDim dim, PhasePoint center) {
  using std::numbers::pi;
  const int n = dim.n();
  const double nd = static_cast<double>(n);
  const PhasePoint c = PhasePoint::wrapped(center.q, center.p);

  std::vector<cplx> amps(static_cast<std::size_t>(n));
  for (int site = 0; site < n; ++site) {
    const double q = site / nd;
    cplx sum = 0.0;
    // Images beyond one period are below exp(-pi N / 4).
    for (int m = -1; m <= 1; ++m) {
      const double dq = q - c.q - m;
      const double envelope = std::exp(-pi * nd * dq * dq);
      sum += envelope * std::polar(1.0, 2.0 * pi * nd * c.p * (q - m));
    }
    amps[static_cast<std::size_t>(site)] = sum;
  }
  return TorusState::normalized(dim, std::move(amps));
}

TorusState momentum_eigenstate(HilbertDim dim, int k) {
  return inverse_dft(TorusState::basis_state(dim, k, Basis::Momentum));
}

cplx overlap(const TorusState& a, const TorusState& b) {
  if (!(a.dim() == b.dim())) throw std::invalid_argument("overlap: dimension mismatch");
  if (a.basis() != b.basis()) throw std::invalid_argument("overlap: representation mismatch");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.amps().size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

}  // namespace torus_echo
