#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace pmindex {

/// Exit codes: 0 success, 1 negative answer, 2 broken input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BatchRow {
  std::string file;
  std::string command;
  /// mu for .eg, mu(G,c) for .ecg, k for .wcg; "invalid" or "-" otherwise.
  std::string value;
  std::string tag;
  long long millis = 0;
};

struct BatchOptions {
  unsigned jobs = 1;
  bool timing = true;
  std::uint64_t pm_limit = 1'000'000;
};

/// One row per .eg/.ecg/.wcg file of `dir` in lexicographic order. A file that
/// fails to read or parse becomes a row tagged "error".
std::vector<BatchRow> batch_rows(const std::filesystem::path& dir, const BatchOptions& opts);

/// Rows as "file,command,mu_or_k,witness_tag,millis" plus the summary footer.
std::string format_batch(const std::vector<BatchRow>& rows, bool timing);

}  // namespace pmindex
