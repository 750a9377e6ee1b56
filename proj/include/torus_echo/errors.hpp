#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace torus_echo {

/// Largest dimension for which dense N x N work (matrices, trace fidelity)
/// is accepted.
inline constexpr int kMatrixGuard = 8192;

/// Raised when a request exceeds a resource guard. `guard()` names it.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, const std::string& what)
      : std::runtime_error(what), guard_(std::move(guard)) {}

  const std::string& guard() const { return guard_; }

 private:
  std::string guard_;
};

void check_matrix_guard(int n);

}  // namespace torus_echo
