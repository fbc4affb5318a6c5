#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace ashom::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kSchemaError = 2,
  kInvariantError = 3,
  kParseError = 4,
  kUsageError = 5,
  kInternalError = 6,
};

struct JobSpec {
  std::string command;
  std::string input;
  std::string coeff = "Z";
  std::optional<std::pair<int, int>> degrees;
  bool json = false;
  std::optional<std::string> modulus_cap;
  std::uint64_t seed = 1;
  std::string cover;
  std::string subcover;
  std::string ses;
  bool sweep = false;
};

/// "3" or "-1..2". Throws std::invalid_argument.
std::pair<int, int> parse_degree_range(const std::string& text);

/// Runs one job, writing the report to out and diagnostics to err.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace ashom::cli
