#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace realeig::cli {

enum ExitCode : int { kSuccess = 0, kCertificationFailure = 1, kBadInput = 2 };

/// Runs one command line (args excludes the program name). Exit code 0 iff
/// every requested certificate passed, 1 on certification failure, 2 on bad
/// input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realeig::cli
