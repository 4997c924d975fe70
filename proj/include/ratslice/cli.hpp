#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratslice::cli {

enum ExitCode : int { ok = 0, input_error = 1, check_failed = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratslice::cli
