#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wzw::cli {

/// Runs one CLI invocation. argv excludes the program name. Returns the
/// process exit code: 0 ok, 1 domain error, 2 usage/parse error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace wzw::cli
