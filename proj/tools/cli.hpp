#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcramer::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;   // I/O, parse, bad flags
inline constexpr int kDomainError = 2;  // singular, size cap, shape mismatch, ...

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcramer::cli
