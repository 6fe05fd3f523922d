#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "aoiadv/model.hpp"

namespace aoiadv::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
  kOverCap = 4,
};

/// Bad command-line input that is not a constraint violation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// status. Human-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b" or "a:b:step" (inclusive), or a comma list "2,4,8". Throws
/// UsageError for malformed or empty ranges.
std::vector<int> parse_range(std::string_view text);

/// Matrix from a generator: cbs:<row>:<start>:<len>, centered:<row>:<len> or
/// twoblock:<row>:<start1>:<len1>:<start2>:<len2>. Throws UsageError for a
/// malformed generator and InfeasibleError when it exceeds the budget.
BlockingMatrix generate_sigma(const SystemConfig& config, std::string_view generator);

/// SHA-1 of "blob <size>\0<content>", hex encoded, as git computes it.
std::string git_blob_hash(std::string_view content);

}  // namespace aoiadv::cli
