#include "torus_echo/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace torus_echo {
namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// The FFTW planner is not re-entrant; execution of an existing plan on new
// arrays is. Plans are kept for the lifetime of the process.
std::mutex planner_mutex;

PlanPair plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(planner_mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  // FFTW_UNALIGNED keeps the codelet choice independent of buffer alignment,
  // so results are bit-identical whichever buffer is passed.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair plans{fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, flags),
                 fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, flags)};
  if (plans.forward == nullptr || plans.backward == nullptr) {
    throw std::runtime_error("FFTW failed to create a plan");
  }
  cache.emplace(n, plans);
  return plans;
}

void execute(void* plan, std::span<std::complex<double>> data, int n) {
  if (static_cast<int>(data.size()) != n) {
    throw std::invalid_argument("Fft: buffer length does not match plan length");
  }
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan), buf, buf);
}

}  // namespace

Fft::Fft(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Fft: length must be positive");
  auto plans = plans_for(n);
  forward_plan_ = plans.forward;
  backward_plan_ = plans.backward;
}

void Fft::forward(std::span<std::complex<double>> data) const {
  execute(forward_plan_, data, n_);
}

void Fft::backward(std::span<std::complex<double>> data) const {
  execute(backward_plan_, data, n_);
}

}  // namespace torus_echo
