#ifndef PUREBETTI_CLI_HPP
#define PUREBETTI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace purebetti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (JSON with --json, text otherwise); diagnostics go to `err` as a
/// single line "error: <ErrorName>: <detail>".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace purebetti::cli

#endif
