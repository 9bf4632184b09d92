#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affgr {

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on an engine disagreement or failed suite, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgr
