#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unaryp::cli {

// Runs one command line (without the program name) against the given
// streams. Exit codes: 0 success (including "member" / "equivalent"),
// 1 negative result (not a member, not equivalent, nothing reducible),
// 2 parse, validation or usage errors. Diagnostics go to `err` only;
// result data goes to `out` only.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace unaryp::cli
