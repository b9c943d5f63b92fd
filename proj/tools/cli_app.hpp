#pragma once

#include <iosfwd>

namespace acr::cli {

// Full command-line front end, in-process for testability: parses argv, runs
// the requested command, writes to the given streams and returns the process
// exit code (0 ok, 1 input/usage errors, 2 internal errors). ANSI color is
// used only when `allow_color` is set and ACR_SCAN_COLOR is not "0".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        bool allow_color = false);

}  // namespace acr::cli
