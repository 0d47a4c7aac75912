#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigrat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs `trig-rational <classify|certify|verify|scan|poly> ...`. args excludes
/// the program name. Standard input is only read by `verify` without a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace trigrat::cli
