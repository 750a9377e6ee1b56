#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "torus_echo/kicked_maps.hpp"
#include "torus_echo/torus_state.hpp"

namespace torus_echo {

enum class SeriesKind { PureState, Trace };

const char* kind_name(SeriesKind kind);

/// Fidelity amplitude f(t) for t = 0..T kicks. For PureState series
/// `center` holds the coherent-state center when the initial state was one.
struct FidelitySeries {
  std::vector<cplx> values;
  SeriesKind kind = SeriesKind::Trace;
  std::optional<PhasePoint> center;
  PerturbedPair pair;

  int horizon() const { return static_cast<int>(values.size()) - 1; }
  std::vector<double> moduli() const;
};

/// The two propagators of a perturbed pair, built once and shared.
struct EchoPropagators {
  explicit EchoPropagators(const PerturbedPair& pair) : pair(pair), u0(pair.u0), u1(pair.u1) {}

  PerturbedPair pair;
  Propagator u0;
  Propagator u1;
};

/// f(t) = <psi| U1^dag(t) U0(t) |psi> for a coherent state centered at `center`.
FidelitySeries fidelity_pure(const PerturbedPair& pair, PhasePoint center, int horizon);
FidelitySeries fidelity_pure(const EchoPropagators& props, PhasePoint center, int horizon);
/// Same for an arbitrary position-representation initial state.
FidelitySeries fidelity_pure(const EchoPropagators& props, const TorusState& initial,
                             int horizon);

/// <f(t)> = Tr[U1^dag(t) U0(t)] / N by evolving all N position basis
/// columns. Columns are processed in fixed blocks and summed in ascending
/// order, so the result does not depend on `threads`.
FidelitySeries fidelity_trace(const PerturbedPair& pair, int horizon, int threads = 1);

/// CSV with header `t,re_f,im_f,abs_f`, preceded by `# <metadata>` when
/// metadata is non-empty.
void write_series_csv(std::ostream& out, const FidelitySeries& series,
                      std::string_view metadata = {});

}  // namespace torus_echo
