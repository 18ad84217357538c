#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "idtrade/encoding.hpp"

namespace idt {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainFailure = 1,  ///< invalid seed, infeasible target, failed condition
  kExitIoError = 2,        ///< unreadable/unwritable file, malformed input, bad usage
  kExitNotConverged = 3,   ///< optimizer did not reach its tolerance
};

struct GlobalOptions {
  EncodingMode mode = EncodingMode::Antiparallel;
  std::uint64_t seed = 0;
  std::optional<std::size_t> mc_samples;
  /// CSV destination; standard output when empty.
  std::optional<std::string> out;
  /// Use the uncorrected optimal-family coefficient and U1 and report which
  /// conditions they violate.
  bool paper_coefficients = false;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns
// an ExitCode. CSV goes to options.out if set, else to `out`.

int cmd_validate(const std::string& path, const GlobalOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_evaluate(const std::string& path, const GlobalOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_sweep(int points, const GlobalOptions& options, std::ostream& out, std::ostream& err);
int cmd_compare(int points, int restarts, const GlobalOptions& options, std::ostream& out,
                std::ostream& err);
/// Checks the four-outcome realization of the seed in `path`, or of the most
/// informative optimal seed when no path is given.
int cmd_povm4_check(const std::optional<std::string>& path, const GlobalOptions& options,
                    std::ostream& out, std::ostream& err);

}  // namespace idt
