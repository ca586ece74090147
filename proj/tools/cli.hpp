#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace outerturan::cli {

enum ExitCode { Ok = 0, Failed = 1, BadInput = 2, Refused = 3 };

/// Runs one command line (args excludes the program name). Never throws.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace outerturan::cli
