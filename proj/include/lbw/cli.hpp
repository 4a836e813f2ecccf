#pragma once

#include <iosfwd>

namespace lbw {

// Exit codes: 0 success, 1 usage/input/validation error, 2 time limit,
// 3 infeasible problem (solve).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lbw
