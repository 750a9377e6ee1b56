#pragma once

#include <complex>
#include <span>
#include <vector>

namespace torus_echo {

using cplx = std::complex<double>;

/// Dimension of the torus Hilbert space. The effective Planck constant is
/// fixed by the dimension, hbar = 1/(2 pi N).
class HilbertDim {
 public:
  explicit HilbertDim(int n);

  int n() const { return n_; }
  double hbar() const { return hbar_; }

  friend bool operator==(const HilbertDim&, const HilbertDim&) = default;

 private:
  int n_;
  double hbar_;
};

enum class Basis { Position, Momentum };

/// A point of the unit torus, both coordinates reduced to [0, 1).
struct PhasePoint {
  double q = 0.0;
  double p = 0.0;

  static PhasePoint wrapped(double q, double p);
};

double wrap_unit(double x);

/// Normalized state vector on the N-site torus. Amplitudes are indexed by
/// position site n (q_n = n/N) or momentum site k (p_k = k/N).
class TorusState {
 public:
  /// Throws std::invalid_argument when the size does not match the
  /// dimension or the vector is not normalized within 1e-10.
  TorusState(HilbertDim dim, std::vector<cplx> amps, Basis basis = Basis::Position);

  /// Rescales an arbitrary non-zero vector to unit norm.
  static TorusState normalized(HilbertDim dim, std::vector<cplx> amps,
                               Basis basis = Basis::Position);
  static TorusState basis_state(HilbertDim dim, int index, Basis basis = Basis::Position);

  HilbertDim dim() const { return dim_; }
  Basis basis() const { return basis_; }
  std::span<const cplx> amps() const { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

 private:
  struct Unchecked {};
  TorusState(Unchecked, HilbertDim dim, std::vector<cplx> amps, Basis basis);

  HilbertDim dim_;
  std::vector<cplx> amps_;
  Basis basis_;

  friend TorusState dft(const TorusState&);
  friend TorusState inverse_dft(const TorusState&);
};

/// Position to momentum representation, kernel exp(-2 pi i n k / N)/sqrt(N).
TorusState dft(const TorusState& state);
/// Momentum to position representation; inverse of dft.
TorusState inverse_dft(const TorusState& state);

/// Periodized minimum-uncertainty Gaussian centered at `center`, in the
/// position representation. Position and momentum widths are equal.
TorusState coherent_state(HilbertDim dim, PhasePoint center);

/// Momentum eigenstate |k> expressed in the position representation.
TorusState momentum_eigenstate(HilbertDim dim, int k);

/// <a|b>. Both states must share dimension and representation.
cplx overlap(const TorusState& a, const TorusState& b);

}  // namespace torus_echo
