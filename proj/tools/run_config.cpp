#include "run_config.hpp"

#include <nldirac/error.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

namespace nldirac::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_flag(const CLI::Option* opt) { return opt->get_expected_min() == 0; }

bool skip(const CLI::Option* opt) {
    const auto& names = opt->get_lnames();
    return names.empty() || names.front() == "help" || names.front() == "config";
}

}  // namespace

std::string normalise_key(std::string key) {
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
        return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    return key;
}

std::string env_name(const std::string& key) {
    std::string out = "NLDIRAC_";
    for (unsigned char c : key) out += c == '-' ? '_' : static_cast<char>(std::toupper(c));
    return out;
}

std::vector<ConfigEntry> parse_config(std::istream& in) {
    std::vector<ConfigEntry> entries;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw SchemaError("expected 'key = value'", line);
        std::string key = trim(text.substr(0, eq));
        if (key.empty()) throw SchemaError("missing key before '='", line);
        key = normalise_key(key);
        if (std::any_of(entries.begin(), entries.end(), [&](const ConfigEntry& e) { return e.key == key; })) {
            throw SchemaError("duplicate key '" + key + "'", line);
        }
        entries.push_back({key, trim(text.substr(eq + 1)), line});
    }
    return entries;
}

std::vector<ConfigEntry> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open config file '" + path + "'", 0);
    return parse_config(in);
}

std::vector<std::string> layered_arguments(const CLI::App& sub, const std::vector<ConfigEntry>& file,
                                           const std::vector<std::string>& user_args) {
    auto inject = [](std::vector<std::string>& out, const CLI::Option* opt, const std::string& value) {
        const std::string flag = "--" + opt->get_lnames().front();
        if (is_flag(opt)) {
            out.push_back(flag + "=" + value);
        } else {
            out.push_back(flag);
            out.push_back(value);
        }
    };

    std::vector<std::string> args;
    for (const ConfigEntry& e : file) {
        const CLI::Option* opt = nullptr;
        for (const CLI::Option* o : sub.get_options()) {
            if (!skip(o) && o->get_lnames().front() == e.key) opt = o;
        }
        if (opt == nullptr) throw SchemaError("unknown key '" + e.key + "' for '" + sub.get_name() + "'", e.line);
        inject(args, opt, e.value);
    }
    for (const CLI::Option* o : sub.get_options()) {
        if (skip(o)) continue;
        if (const char* v = std::getenv(env_name(o->get_lnames().front()).c_str())) inject(args, o, v);
    }
    args.insert(args.end(), user_args.begin(), user_args.end());
    return args;
}

void write_resolved_config(std::ostream& out, const CLI::App& sub, const std::string& prefix) {
    for (const CLI::Option* o : sub.get_options()) {
        if (skip(o)) continue;
        std::string value;
        if (o->count() > 0) {
            value = o->results().back();
        } else if (is_flag(o)) {
            value = "false";
        } else {
            value = o->get_default_str();
        }
        if (o->count() == 0 && value.empty()) {
            out << "# " << prefix << o->get_lnames().front() << " is unset\n";
        } else {
            out << prefix << o->get_lnames().front() << " = " << value << '\n';
        }
    }
}

}  // namespace nldirac::cli
