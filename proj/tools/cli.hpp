#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace jtau {

/* Dispatches one CLI invocation. args excludes the program name. Returns the
   process exit code: 0 success, 1 computation error or failed verification
   (error name on err), 2 usage error. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jtau
