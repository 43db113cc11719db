#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "injwords/word.hpp"

namespace injwords::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode { ok = 0, usage_error = 1, computation_failure = 2 };

/// Reads one canonical word per line; blank lines and lines starting with
/// '#' are skipped. Duplicates collapse. Throws std::invalid_argument with
/// "<path>:<line>: <reason>" on the first bad line.
std::vector<InjWord> load_generators(const std::string& path, int n);

/// Runs one invocation. The report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace injwords::cli
