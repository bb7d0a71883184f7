#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laurmon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
/// --strict was given and the answer is not definite.
inline constexpr int kExitIndefinite = 3;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// args excludes the program name. Writes one JSON document to out (or its
/// flattened form with --pretty) and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env);

}  // namespace laurmon::cli
