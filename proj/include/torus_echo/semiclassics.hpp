#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "torus_echo/kicked_maps.hpp"

namespace torus_echo {

/// Bessel function of the first kind, order zero. Power series for
/// |x| <= 12, Hankel asymptotic expansion beyond.
double bessel_j0(double x);

/// Threshold on |J0| below which the rate is reported as diverged.
inline constexpr double kGammaDivergence = 1e-12;

/// Short-time decay rate -ln|J0(dkh)| of the average fidelity amplitude;
/// nullopt where |J0(dkh)| < kGammaDivergence.
std::optional<double> gamma_rate(double dkh);

struct GammaCurve {
  std::vector<double> dkh;
  /// +infinity marks diverged entries.
  std::vector<double> gamma;
};

/// `points` evenly spaced values on [0, dkh_max].
GammaCurve gamma_curve(double dkh_max, int points);

/// CSV `dkh,gamma`, `inf` for diverged entries.
void write_gamma_csv(std::ostream& out, const GammaCurve& curve, std::string_view metadata = {});

struct ShortTimeCheck {
  double measured = 0.0;
  /// +infinity when the prediction diverges.
  double predicted = 0.0;
  double residual = 0.0;
};

/// Compares -ln|<f(1)>| from the trace fidelity with gamma_rate(dkh).
ShortTimeCheck short_time_check(const PerturbedPair& pair);

}  // namespace torus_echo
