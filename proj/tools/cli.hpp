#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainspec::cli {

// Dispatches one invocation. `args` excludes the program name and is in
// natural command-line order. Graph-reading subcommands take a FILE argument
// or read the .ggr from `in` when the argument is absent or "-".
//
// Exit codes: 0 success, 1 at least one verification row failed, 2 usage or
// input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace gainspec::cli
