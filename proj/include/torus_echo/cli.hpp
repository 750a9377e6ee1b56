#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus_echo {

/// Invalid command line or configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Flat `key = value` configuration file; `#` starts a comment line.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Entry point of the `torus-echo` tool. `args` excludes the program name.
/// Output files go to disk; the one-line summary goes to `out`, progress
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace torus_echo
