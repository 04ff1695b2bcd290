#ifndef ANGLEPOLY_CLI_HPP
#define ANGLEPOLY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace anglepoly::cli {

enum ExitCode { kOk = 0, kDomain = 1, kUsage = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace anglepoly::cli

#endif
