#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation (arguments without the program name). Reports go to
/// `out` or the --out file, diagnostics to `err`. Returns the exit code:
/// 0 ok, 1 computational error (one line `error kind=... message=...`),
/// 2 usage error (nothing written to `out`).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetalab::cli
