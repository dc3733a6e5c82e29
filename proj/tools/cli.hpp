#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drn::cli {

enum ExitCode : int { ok = 0, invalid = 1, input_error = 2, construction_defect = 3, budget_exhausted = 4 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drn::cli
