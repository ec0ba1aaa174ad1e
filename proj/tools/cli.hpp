#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace growthcodes::cli {

// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage, I/O,
// parse or budget error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growthcodes::cli
