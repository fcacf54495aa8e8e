#ifndef CAT_CLI_HPP
#define CAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cat/graph.hpp"

namespace cat {

enum ExitCode : int {
    kExitOk = 0,
    kExitRejected = 1,
    kExitBadInput = 2,
    kExitDegenerate = 3,
};

// Subcommands: learn, test, simulate, gap, metrics, reproduce. `args` excludes
// the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

// "j->i" with 1-based indices or column names.
Edge parse_edge(const std::string& text, const std::vector<std::string>& names);

}  // namespace cat

#endif  // CAT_CLI_HPP
