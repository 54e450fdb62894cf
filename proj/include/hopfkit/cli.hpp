#pragma once

#include <iosfwd>

namespace hopfkit {

/// Exit codes: 0 all laws hold, 1 a law (or a functor precondition) fails, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfkit
