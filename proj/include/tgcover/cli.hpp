#ifndef TGCOVER_CLI_HPP
#define TGCOVER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tgcover {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitNegative = 1,  // UNSAT, or an invalid cover / pair cut
    kExitUsage = 2,     // bad arguments, unreadable or malformed input
};

/// `args` excludes the program name. The default for `--jobs` is read from
/// TGCOVER_JOBS.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgcover

#endif  // TGCOVER_CLI_HPP
