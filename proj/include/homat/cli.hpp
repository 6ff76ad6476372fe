#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homat {

// Runs one command. args excludes the program name. Exit codes: 0 success
// (verdicts consistent), 1 a verified identity failed, 2 bad input,
// 3 budget exceeded or verdict inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homat
