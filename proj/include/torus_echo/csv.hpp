#pragma once

#include <string>

namespace torus_echo {

/// Shortest decimal text that parses back to exactly `value`; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_double(double value);

}  // namespace torus_echo
