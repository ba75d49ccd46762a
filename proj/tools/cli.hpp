#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tempsep::cli {

/// Runs one command. Returns the process exit code: 0 for yes/valid
/// decisions and successful non-decision commands, 1 for no/invalid
/// decisions, 2 for parse or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempsep::cli
