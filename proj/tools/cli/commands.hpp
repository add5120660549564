#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratpow::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. JSON goes to `out`,
/// diagnostics and human summaries to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratpow::cli
