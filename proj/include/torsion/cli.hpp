#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsion::cli {

// Exit codes: 0 success, 1 check/verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsion::cli
