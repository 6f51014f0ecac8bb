#ifndef PTRIG_CLI_HPP
#define PTRIG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ptrig_cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,         // bad flags or an argument outside its domain
    kNoConvergence = 2, // an iteration or series hit its cap
    kResidualGate = 3,  // a computed value failed its residual certificate
};

/// Run the ptrig command line on explicit argv/streams. main() forwards to
/// this; tests call it in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptrig_cli

#endif
