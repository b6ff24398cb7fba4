#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrData = 1,
  kCertificationFailure = 2,
};

// Runs one command line (without the program name). All output goes to the
// given streams so the same entry point serves the binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnt::cli
