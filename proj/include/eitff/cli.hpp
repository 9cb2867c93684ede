#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace eitff {

enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitUsage = 2, kExitResource = 3, kExitMismatch = 4 };

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Runs one command; args exclude the program name. Option values come from
/// the command line, then EITFF_<OPTION> variables, then the --config file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env);

} // namespace eitff
