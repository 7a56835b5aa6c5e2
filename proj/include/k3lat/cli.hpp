#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat::cli {

// Runs one CLI invocation. Exit code 0 = success / all checks pass,
// 1 = verification failure, 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lat::cli
