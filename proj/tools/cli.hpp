#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistgate::cli {

/// Exit codes: 0 ok, 1 a check did not pass, 2 unsupported input or usage error.
enum class Status { Ok = 0, CheckFailed = 1, UnsupportedInput = 2 };

/// Runs one invocation; `args` excludes the program name. Structured output
/// (--json) or the text report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistgate::cli
