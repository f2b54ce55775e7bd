#pragma once

#include <ostream>

namespace dualbasis::cli {

/// Parses argv, runs one command and writes its output. Returns the exit
/// code: 0 success, 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualbasis::cli
