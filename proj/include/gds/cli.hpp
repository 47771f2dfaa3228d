#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gds::cli {

/// Exit codes: 0 success, 1 domain error (message names the error kind),
/// 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace gds::cli
