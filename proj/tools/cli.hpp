#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semistab::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
    kOk = 0,
    kMismatch = 1,  ///< oracle disagreement or failed replay
    kUsage = 2,
    kNotSemistable = 3,
    kUnknown = 4,
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace semistab::cli
