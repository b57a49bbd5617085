#ifndef BERGE_CLI_HPP
#define BERGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace berge::cli {

// Exit codes: 0 success / copy found, 1 negative result (copy-free host,
// bound holds, extremal certificate), 2 usage or input error, 3 reserved
// for the falsification alarm.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace berge::cli

#endif
