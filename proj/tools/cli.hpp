#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plott::cli {

/// Runs one CLI invocation. Exit status: 0 success, 1 input validation
/// failure, 2 checked property violated, 3 capacity exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plott::cli
