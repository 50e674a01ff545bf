#pragma once

// Command line front end. Exit codes: 0 success, 2 invalid arguments or
// domain, 3 work budget exceeded, 4 consistency or numerical failure.

#include <ostream>

namespace latcon {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latcon
