#pragma once

#include "run_config.hpp"

#include <nldirac/field_io.hpp>
#include <nldirac/oracles.hpp>

#include <array>
#include <optional>
#include <vector>

#include <functional>
#include <ostream>
#include <string_view>

namespace CLI {
class App;
}

namespace nldirac::cli {

/// Stable `key = value` report lines.
class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void put(std::string_view key, double value) { line(key, format_double(value)); }
    void put(std::string_view key, std::string_view value) { line(key, value); }
    void put(std::string_view key, const char* value) { line(key, value); }
    void put(std::string_view key, bool value) { line(key, value ? "true" : "false"); }
    void put(std::string_view key, std::size_t value) { line(key, std::to_string(value)); }
    void put(std::string_view key, int value) { line(key, std::to_string(value)); }

private:
    void line(std::string_view key, std::string_view value) { out_ << key << " = " << value << '\n'; }

    std::ostream& out_;
};

/// A registered subcommand. `run` executes after parsing and returns the
/// process exit code; it may throw nldirac errors, which main maps.
struct Command {
    CLI::App* app;
    std::function<int(std::ostream&)> run;
};

Command add_verify_table1(CLI::App& parent);
Command add_residual(CLI::App& parent);
Command add_evolve(CLI::App& parent);
Command add_reduce(CLI::App& parent);
Command add_scale_check(CLI::App& parent);
Command add_sweep(CLI::App& parent);

/// "1,3" → {1, 3}; rows must be 1-4. An empty string is an empty subset.
std::vector<int> parse_rows(const std::string& text);

/// --c, --beta-plus, ... for each closed-form constant, each name after `prefix`.
void add_constant_options(CLI::App& app, std::array<std::optional<double>, 9>& constants,
                          const std::string& prefix = "");
OracleConstants apply_overrides(const std::array<std::optional<double>, 9>& overrides);

/// The resolved options of `sub` as `config.<key> = value` report lines.
void report_config(std::ostream& out, const CLI::App& sub);

/// `path` plus ".config", holding the resolved options of `sub`.
void write_sidecar(const std::string& path, const CLI::App& sub);

}  // namespace nldirac::cli
