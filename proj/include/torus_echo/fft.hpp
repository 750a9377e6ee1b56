#pragma once

#include <complex>
#include <span>

namespace torus_echo {

/// Unnormalized in-place complex transform of fixed length, backed by FFTW.
/// Plans are created once per length and shared; execution is thread-safe.
class Fft {
 public:
  explicit Fft(int n);

  int size() const { return n_; }

  /// x_k <- sum_n x_n exp(-2 pi i n k / N)
  void forward(std::span<std::complex<double>> data) const;
  /// x_n <- sum_k x_k exp(+2 pi i n k / N)
  void backward(std::span<std::complex<double>> data) const;

 private:
  int n_;
  void* forward_plan_;
  void* backward_plan_;
};

}  // namespace torus_echo
