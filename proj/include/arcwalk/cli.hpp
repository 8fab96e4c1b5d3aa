#pragma once

#include <iosfwd>

namespace arcwalk {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 2 configuration error, 3 data error, 4 numerical failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arcwalk
