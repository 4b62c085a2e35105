#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symhermite {

// Full command-line surface; argv without the program name. Exit codes:
// 0 success, 1 usage or parse error, 2 precondition violation,
// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symhermite
