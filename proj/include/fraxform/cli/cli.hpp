#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fraxform::cli {

/// Runs one command line (without the program name) and returns the exit code:
/// 0 success, 2 parse/usage error, 3 unsupported method, 4 numeric accuracy,
/// 5 identity failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fraxform::cli
