#pragma once

#include <stdexcept>
#include <string>

namespace qjloc {

// Exit codes used by the CLI. Library code throws the matching exception
// types; main() translates.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitFeasibilityError = 3,
  kExitRuntimeAbort = 4,
};

// Bad or inconsistent user configuration (unknown key, missing key, invalid
// value).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Coupling too strong for the particle count: the non-scattering probability
// would go negative somewhere (requires g^2 N^2 <= 1).
struct FeasibilityError : std::runtime_error {
  explicit FeasibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A projection annihilated the state (measure-zero outcome); the trajectory
// cannot continue.
struct ZeroNormError : std::runtime_error {
  explicit ZeroNormError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qjloc
