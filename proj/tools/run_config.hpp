#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace nldirac::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_verification_failed = 2,
    exit_input_error = 3,
    exit_numerical_failure = 4,
};

/// One `key = value` line of a config file.
struct ConfigEntry {
    std::string key;  ///< normalised: lower case, '_' → '-'
    std::string value;
    std::size_t line;
};

/// Parse a line-oriented config: `key = value`, '#' starts a comment,
/// blank lines are ignored. Throws SchemaError on malformed lines.
std::vector<ConfigEntry> parse_config(std::istream& in);
std::vector<ConfigEntry> load_config(const std::string& path);

std::string normalise_key(std::string key);

/// `NLDIRAC_T_FINAL` for the option `t-final`.
std::string env_name(const std::string& key);

/// Command-line arguments implementing file < environment < flags for the
/// options of `sub`. Every option is single-valued and keeps its last
/// occurrence, so the injected file and environment values come first and
/// the user's own arguments last. Unknown config keys throw SchemaError.
std::vector<std::string> layered_arguments(const CLI::App& sub, const std::vector<ConfigEntry>& file,
                                           const std::vector<std::string>& user_args);

/// Every option of `sub` (except help/config) as `key = value` lines, in a
/// form `parse_config` reads back.
void write_resolved_config(std::ostream& out, const CLI::App& sub, const std::string& prefix = "");

}  // namespace nldirac::cli
