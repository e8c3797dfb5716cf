#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonrep::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCounterexample = 2;

// Parses argv and dispatches. Certificates go to --out (written atomically)
// or to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace nonrep::cli
