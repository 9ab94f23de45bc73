#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landau/limits.hpp"
#include "landau/rational.hpp"

namespace landau::cli {

enum class Command { Coeffs, Gn, Table1, VerifyTheorem, VerifyBounds, VerifyLemma3, VerifyLemma4, VerifySection5, ReportAll };
enum class Format { Csv, Json, Text };

std::string_view to_string(Command c) noexcept;

/// Exit statuses.
inline constexpr int kExitProven = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 3;

struct RunConfig {
  Command command = Command::Coeffs;
  /// Zero means "the command's default".
  std::int64_t n_max = 0;
  int l_max = -1;
  int K = 0;
  int k_max = 0;
  int j_span = 0;
  int precision_ceiling = 4096;
  int digits = 30;
  unsigned threads = 0;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  /// (k, alpha_k) replacements applied to the computed table.
  std::vector<std::pair<int, Rational>> alpha_overrides;
  /// Lower/upper truncation orders for verify-bounds; empty means the default six pairs.
  std::vector<std::pair<int, int>> bound_orders;
};

/// Checks ranges against `limits`; throws Error(InvalidArgument or ResourceLimit).
void validate(const RunConfig& config, const Limits& limits);

/// Runs one command, writing the artifact to `out` (or the output file) and
/// diagnostics to `err`. Returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors return kExitUsage.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace landau::cli
