#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mdx::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kParseError = 2,
  kRuleError = 3,
  kInconsistentMetric = 4,
  kBudgetExceeded = 5,
};

/// Runs the `mdx` command line. `args[0]` is the program name. Reports go to
/// `out` as JSON (or a short summary with --plain); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, used for the inputs digest of a report.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace mdx::cli
