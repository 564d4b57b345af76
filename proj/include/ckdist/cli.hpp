#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ckdist::cli {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success / witness, 1 runtime error, 2 inconclusive
// refutation, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ckdist::cli
