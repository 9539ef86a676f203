#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rs3::cli {

// Exit codes: 0 success, 1 usage error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rs3::cli
