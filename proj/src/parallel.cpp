#include "torus_echo/parallel.hpp"

#include <cstdlib>
#include <string>

namespace torus_echo {

int thread_count_hint() {
  if (const char* env = std::getenv("TORUS_ECHO_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace torus_echo
