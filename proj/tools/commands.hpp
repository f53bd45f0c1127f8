#pragma once

#include <iosfwd>

namespace zpt::cli {

// Exit codes: 0 success, 1 malformed input, 2 no decomposition or a violated hypothesis.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zpt::cli
