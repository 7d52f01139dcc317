// cli.hpp - the `sidon` command line, callable in-process.
//
// Exit codes: 0 success, 1 usage or IO error, 2 verification mismatch,
// 3 search budget exceeded.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sidon::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
