#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lorq::cli {

// Batch front door; returns the process exit code.
//   0  success, verdicts printed
//   2  a computed verdict is a failure (not causal, not free, ...)
//   1  input could not be parsed or is structurally invalid
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorq::cli
