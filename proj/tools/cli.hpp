#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covering::cli {

/// Exit statuses of the covering-codes command line tool.
enum ExitCode : int {
  kOk = 0,
  kNotCovered = 1,  // verify found an uncovered word; check-corollary found a failing step
  kUsage = 2,       // bad flags, unreadable or malformed files, guard violations
  kInfeasible = 3,  // parameters outside a bound's or construction's domain
  kFailed = 4,      // construction could not meet a domination threshold
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covering::cli
