#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidchart {

// Exit codes: 0 success, 1 verification failure (invalid chart, identity or
// balance violated, realization not found), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidchart
