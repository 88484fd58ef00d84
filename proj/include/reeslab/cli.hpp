#pragma once

// Entry point of the rees-lab command-line tool, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace reeslab {

/// `args` excludes the program name. Returns the process exit code:
/// 0 completed, 1 verdict differs from --expect (or a repro item failed),
/// 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reeslab
