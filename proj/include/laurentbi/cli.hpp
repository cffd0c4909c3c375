#pragma once

#include <string>
#include <vector>

namespace laurentbi::cli {

// Runs one CLI invocation (args exclude the program name). Exit codes:
//   0  success
//   1  tolerance/assertion failure (counterexample candidates under --strict)
//   2  usage or file I/O error
int run(const std::vector<std::string>& args);

}  // namespace laurentbi::cli
