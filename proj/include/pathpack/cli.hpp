#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathpack {

// Exit codes: 0 success, 1 semantic failure (validation failed or a theorem
// falsifier was detected), 2 input error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathpack
