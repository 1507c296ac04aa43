#ifndef HVF_TOOLS_CLI_HPP
#define HVF_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hvf::cli
{

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hvf::cli

#endif
