#include "torus_echo/echo_engine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "torus_echo/csv.hpp"
#include "torus_echo/parallel.hpp"

namespace torus_echo {

namespace {

constexpr int kColumnBlock = 32;

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

void check_horizon(int horizon) {
  if (horizon < 1) throw std::invalid_argument("fidelity series need a horizon T >= 1");
}

}  // namespace

const char* kind_name(SeriesKind kind) {
  return kind == SeriesKind::Trace ? "trace" : "pure";
}

std::vector<double> FidelitySeries::moduli() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(std::abs(v));
  return out;
}

FidelitySeries fidelity_pure(const PerturbedPair& pair, PhasePoint center, int horizon) {
  return fidelity_pure(EchoPropagators(pair), center, horizon);
}

FidelitySeries fidelity_pure(const EchoPropagators& props, PhasePoint center, int horizon) {
  auto series = fidelity_pure(props, coherent_state(props.pair.u0.dim, center), horizon);
  series.center = PhasePoint::wrapped(center.q, center.p);
  return series;
}

FidelitySeries fidelity_pure(const EchoPropagators& props, const TorusState& initial,
                             int horizon) {
  check_horizon(horizon);
  if (initial.basis() != Basis::Position || !(initial.dim() == props.pair.u0.dim)) {
    throw std::invalid_argument("fidelity_pure: initial state must be a position-"
                                "representation state of the map dimension");
  }
  std::vector<cplx> a(initial.amps().begin(), initial.amps().end());
  std::vector<cplx> b = a;

  FidelitySeries series{{}, SeriesKind::PureState, std::nullopt, props.pair};
  series.values.reserve(static_cast<std::size_t>(horizon) + 1);
  series.values.push_back(1.0);
  for (int t = 1; t <= horizon; ++t) {
    props.u0.step(a);
    props.u1.step(b);
    series.values.push_back(inner(b, a));
  }
  return series;
}

FidelitySeries fidelity_trace(const PerturbedPair& pair, int horizon, int threads) {
  check_horizon(horizon);
  const int n = pair.u0.dim.n();
  check_matrix_guard(n);

  const EchoPropagators props(pair);
  const auto steps = static_cast<std::size_t>(horizon) + 1;
  const std::size_t blocks = (static_cast<std::size_t>(n) + kColumnBlock - 1) / kColumnBlock;
  std::vector<std::vector<cplx>> partial(blocks, std::vector<cplx>(steps));

  parallel_for(blocks, threads, [&](std::size_t block) {
    std::vector<cplx> a(static_cast<std::size_t>(n));
    std::vector<cplx> b(static_cast<std::size_t>(n));
    auto& acc = partial[block];
    const int first = static_cast<int>(block) * kColumnBlock;
    const int last = std::min(n, first + kColumnBlock);
    for (int col = first; col < last; ++col) {
      std::fill(a.begin(), a.end(), cplx{});
      a[static_cast<std::size_t>(col)] = 1.0;
      b = a;
      for (std::size_t t = 1; t < steps; ++t) {
        props.u0.step(a);
        props.u1.step(b);
        acc[t] += inner(b, a);
      }
    }
  });

  FidelitySeries series{std::vector<cplx>(steps), SeriesKind::Trace, std::nullopt, pair};
  series.values[0] = 1.0;
  for (std::size_t t = 1; t < steps; ++t) {
    cplx sum = 0.0;
    for (const auto& block : partial) sum += block[t];
    series.values[t] = sum / static_cast<double>(n);
  }
  return series;
}

void write_series_csv(std::ostream& out, const FidelitySeries& series,
                      std::string_view metadata) {
  if (!metadata.empty()) out << "# " << metadata << '\n';
  out << "t,re_f,im_f,abs_f\n";
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    const cplx f = series.values[t];
    out << t << ',' << format_double(f.real()) << ',' << format_double(f.imag()) << ','
        << format_double(std::abs(f)) << '\n';
  }
}

}  // namespace torus_echo
