#ifndef HOMOTALLY_TOOLS_CLI_H_
#define HOMOTALLY_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace homotally {

// Runs one `homotally` invocation; args excludes the program name. Errors go
// to `err` as a single JSON line and select the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homotally

#endif  // HOMOTALLY_TOOLS_CLI_H_
