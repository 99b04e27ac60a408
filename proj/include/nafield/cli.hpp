#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nafield::cli {

/// Runs one CLI invocation (args excludes the program name). Returns the
/// process exit code: 0 success, 1 domain error (a single
/// "error: <kind>: <detail>" line on err), 2 usage error. Output is
/// byte-deterministic given args and input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace nafield::cli
