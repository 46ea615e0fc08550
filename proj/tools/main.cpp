#include "commands.hpp"
#include "run_config.hpp"

#include <nldirac/error.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace nldirac::cli {

void report_config(std::ostream& out, const CLI::App& sub) { write_resolved_config(out, sub, "config."); }

void write_sidecar(const std::string& path, const CLI::App& sub) {
    std::ofstream out(path + ".config");
    if (!out) throw ContractViolation("cannot write '" + path + ".config'");
    out << "# resolved options for '" << sub.get_name() << "'\n";
    write_resolved_config(out, sub);
}

namespace {

// --config may appear anywhere after the subcommand; pull it out before the
// real parse so its contents can be layered under the other arguments.
std::string extract_config_path(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return path;
}

int run(int argc, char** argv) {
    CLI::App app{"Nonlinear Dirac models in 2+1 dimensions: verification, evolution and sweeps", "nldirac"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)->always_capture_default();

    std::vector<Command> commands{add_verify_table1(app), add_residual(app), add_evolve(app),
                                  add_reduce(app),        add_scale_check(app), add_sweep(app)};
    std::string config_help_target;  // --config is consumed before parsing; registered for --help
    for (auto& c : commands) {
        c.app->add_option("--config", config_help_target, "Config file of 'key = value' lines (flags override it)");
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    const Command* chosen = nullptr;
    if (!args.empty()) {
        for (const auto& c : commands) {
            if (c.app->get_name() == args.front()) chosen = &c;
        }
    }

    std::vector<std::string> final_args = args;
    if (chosen != nullptr) {
        std::vector<std::string> rest(args.begin() + 1, args.end());
        const std::string config_path = extract_config_path(rest);
        std::vector<ConfigEntry> file;
        try {
            if (!config_path.empty()) file = load_config(config_path);
            final_args = layered_arguments(*chosen->app, file, rest);
        } catch (const SchemaError& e) {
            std::cerr << "error: " << (config_path.empty() ? "" : config_path + ": ") << e.what() << '\n';
            return exit_input_error;
        }
        final_args.insert(final_args.begin(), args.front());
    }

    std::vector<char*> cargv{argv[0]};
    for (auto& a : final_args) cargv.push_back(a.data());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        return chosen->run(std::cout);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical_failure;
    } catch (const RadicandError& e) {
        std::cerr << "radicand error: " << e.what() << '\n';
        return exit_numerical_failure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace
}  // namespace nldirac::cli

int main(int argc, char** argv) { return nldirac::cli::run(argc, argv); }
