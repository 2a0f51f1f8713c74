#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hwvkit::cli {

// Runs one command line (without the program name).  Returns 0 when every
// check passed, 1 on a verification failure and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hwvkit::cli
