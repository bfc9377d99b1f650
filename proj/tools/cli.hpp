#pragma once

#include <iosfwd>

namespace pfpos::cli {

/// Exit status: prove gives 0/1/2 for True/False/Unknown, other commands 0;
/// errors are 3 (bad input), 4 (underdetermined sequence) or CLI11's codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfpos::cli
