#include "torus_echo/semiclassics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "torus_echo/csv.hpp"
#include "torus_echo/echo_engine.hpp"

namespace torus_echo {

namespace {

constexpr double kSeriesLimit = 12.0;

double j0_series(double x) {
  const double quarter_sq = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -quarter_sq / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)] with
// a_k = prod_{j<=k} (-(2j-1)^2) / (k! 8^k); P takes the even a_k with
// alternating sign, Q the odd ones. The series is summed until its terms
// stop decreasing.
double j0_asymptotic(double x) {
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 60; ++k) {
    if (k > 0) a *= -static_cast<double>((2 * k - 1) * (2 * k - 1)) / (8.0 * k * x);
    const double magnitude = std::abs(a);
    if (magnitude > previous) break;
    previous = magnitude;
    // (-1)^floor(k/2) gives the alternation inside P and Q.
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * a;
    } else {
      q += sign * a;
    }
    if (magnitude < 1e-17) break;
  }
  const double phase = x - 0.25 * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(phase) - q * std::sin(phase));
}

}  // namespace

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel_j0: argument must be finite");
  x = std::abs(x);
  return x <= kSeriesLimit ? j0_series(x) : j0_asymptotic(x);
}

std::optional<double> gamma_rate(double dkh) {
  const double j0 = std::abs(bessel_j0(dkh));
  if (j0 < kGammaDivergence) return std::nullopt;
  return std::max(0.0, -std::log(j0));
}

GammaCurve gamma_curve(double dkh_max, int points) {
  if (points < 2) throw std::invalid_argument("gamma_curve: need at least 2 points");
  if (!(dkh_max > 0.0) || !std::isfinite(dkh_max)) {
    throw std::invalid_argument("gamma_curve: dkh_max must be positive and finite");
  }
  GammaCurve curve;
  curve.dkh.reserve(static_cast<std::size_t>(points));
  curve.gamma.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double dkh = dkh_max * i / (points - 1);
    curve.dkh.push_back(dkh);
    curve.gamma.push_back(gamma_rate(dkh).value_or(std::numeric_limits<double>::infinity()));
  }
  return curve;
}

void write_gamma_csv(std::ostream& out, const GammaCurve& curve, std::string_view metadata) {
  if (!metadata.empty()) out << "# " << metadata << '\n';
  out << "dkh,gamma\n";
  for (std::size_t i = 0; i < curve.dkh.size(); ++i) {
    out << format_double(curve.dkh[i]) << ',' << format_double(curve.gamma[i]) << '\n';
  }
}

ShortTimeCheck short_time_check(const PerturbedPair& pair) {
  const auto series = fidelity_trace(pair, 1);
  ShortTimeCheck check;
  check.measured = -std::log(std::abs(series.values[1]));
  check.predicted = gamma_rate(pair.dkh()).value_or(std::numeric_limits<double>::infinity());
  check.residual = std::abs(check.measured - check.predicted);
  return check;
}

}  // namespace torus_echo
