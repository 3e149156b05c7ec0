#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superroots::cli {

/// Exit codes: 0 success, 1 violations or failed checks, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superroots::cli
