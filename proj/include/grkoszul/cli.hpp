#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace grk {

// Runs the command line tool on args (without the program name). The report
// goes to out, diagnostics to err. Returns the process exit status:
// 0 success, 2 input error, 3 failed hypothesis, 4 internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grk
