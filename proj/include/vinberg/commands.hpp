#ifndef VINBERG_COMMANDS_HPP_
#define VINBERG_COMMANDS_HPP_

// The four command-line operations, independent of argument parsing so
// that tests and the Python module can drive them directly.
//
// Exit codes: 0 finite volume or success, 1 usage or internal error,
// 2 root budget exhausted, 3 non-reflectivity certified.

#include <cstddef>
#include <optional>
#include <string>

#include "vinberg/io.hpp"
#include "vinberg/oracle.hpp"

namespace vinberg {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitBudget = 2, kExitCertified = 3 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string output; // document in the requested format
  std::string error;  // JSON error object, empty on success
};

struct RunFlags {
  Coord phi = 3;
  int dim = 2;
  std::size_t max_roots = 0; // 0 means 4 dim
  Coord max_k0 = 10'000;
  Format format = Format::Json;
};

CommandResult cmd_run(const RunFlags& flags);

// `input` is the text of a check document (see parse_check_input); `dim`
// overrides the dimension it names.
CommandResult cmd_check(const std::string& input, std::optional<int> dim, Format format = Format::Json);

CommandResult cmd_certify(Coord phi, int dim, Format format = Format::Json);

// Dot output is not available for the comparison report.
CommandResult cmd_oracle(Coord phi, int dim, Coord max_k0 = kOracleMaxK0, std::size_t max_roots = 0,
                         Format format = Format::Json);

// {"error": {"type": ..., "message": ..., ...}} for the exception in flight.
std::string error_object(const std::exception& e);

} // namespace vinberg

#endif
