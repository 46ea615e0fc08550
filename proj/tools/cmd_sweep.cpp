#include "commands.hpp"

#include <nldirac/error.hpp>
#include <nldirac/odesolve.hpp>
#include <nldirac/oracles.hpp>

#include "CLI11.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

namespace nldirac::cli {

namespace {

struct Options {
    int row = 4;
    std::string values;
    std::array<std::optional<double>, 9> constants{};
    std::optional<double> s_start;
    std::optional<double> s_end;
    std::size_t points = 201;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double pole_threshold = 1e8;
    unsigned threads = 0;
    std::string out = "sweep.csv";
};

struct Axis {
    std::string name;
    std::vector<double> values;
};

struct Outcome {
    std::string status = "error";
    std::string halt_reason;
    double s_start = 0.0;
    double s_end = 0.0;
    double s_halt = 0.0;
    std::size_t steps = 0;
    std::size_t compared = 0;
    double max_deviation = 0.0;
    std::string error;
};

double to_double(const std::string& text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw ContractViolation("not a finite number: '" + text + "'");
    }
    return v;
}

std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    return s;
}

// "m=0.5,1,2;alpha_plus=0.1:1:10" — comma lists or lo:hi:count.
std::vector<Axis> parse_axes(const std::string& text) {
    std::vector<Axis> axes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = strip(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ContractViolation("expected name=values in '" + item + "'");
        Axis axis{item.substr(0, eq), {}};
        const auto names = OracleConstants::names();
        if (axis.name != "s_start" && axis.name != "s_end" &&
            std::find(names.begin(), names.end(), axis.name) == names.end()) {
            throw ContractViolation("cannot sweep '" + axis.name + "'");
        }
        for (const Axis& a : axes) {
            if (a.name == axis.name) throw ContractViolation("'" + axis.name + "' swept twice");
        }
        const std::string body = item.substr(eq + 1);
        if (std::count(body.begin(), body.end(), ':') == 2) {
            const auto c1 = body.find(':');
            const auto c2 = body.find(':', c1 + 1);
            const double lo = to_double(body.substr(0, c1));
            const double hi = to_double(body.substr(c1 + 1, c2 - c1 - 1));
            const double count = to_double(body.substr(c2 + 1));
            if (count < 0 || count != std::floor(count)) throw ContractViolation("count must be a whole number");
            const auto n = static_cast<std::size_t>(count);
            for (std::size_t i = 0; i < n; ++i) {
                axis.values.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
            }
        } else {
            std::stringstream vs(body);
            std::string v;
            while (std::getline(vs, v, ',')) {
                if (!v.empty()) axis.values.push_back(to_double(v));
            }
        }
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::string clean(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

Outcome run_tuple(const Options& o, const std::vector<Axis>& axes, const std::vector<double>& tuple) {
    Outcome out;
    try {
        OracleConstants constants = apply_overrides(o.constants);
        std::optional<double> s0 = o.s_start;
        std::optional<double> s1 = o.s_end;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            if (axes[i].name == "s_start") {
                s0 = tuple[i];
            } else if (axes[i].name == "s_end") {
                s1 = tuple[i];
            } else {
                constants.set(axes[i].name, tuple[i]);
            }
        }
        const AnalyticSolution sol(o.row, constants);
        const Assignment a = verify_row(sol).assignment_used;
        const Interval span = default_ivp_span(sol);
        out.s_start = s0.value_or(span.lo);
        out.s_end = s1.value_or(span.hi);

        IvpProblem problem{sol.system(), out.s_start, out.s_end, sol.evaluate(out.s_start).chi(a)};
        problem.abs_tol = o.abs_tol;
        problem.rel_tol = o.rel_tol;
        problem.pole_threshold = o.pole_threshold;
        problem.output_points = o.points;
        const IvpResult r = integrate(problem);
        out.status = r.reason == HaltReason::reached_end ? "ok" : "halted";
        out.halt_reason = std::string(to_string(r.reason));
        out.s_halt = r.s_halt;
        out.steps = r.steps;
        for (std::size_t i = 0; i < r.s.size(); ++i) {
            if (!sol.domain().contains(r.s[i]) && !(o.row == 4 && r.s[i] == 0.0)) continue;
            out.max_deviation = std::max(out.max_deviation, (r.chi[i] - sol.evaluate(r.s[i]).chi(a)).max_abs());
            ++out.compared;
        }
    } catch (const std::exception& e) {
        out.status = "error";
        out.error = clean(e.what());
    }
    return out;
}

}  // namespace

Command add_sweep(CLI::App& parent) {
    auto opts = std::make_shared<Options>();
    auto* app = parent.add_subcommand("sweep", "Oracle-seeded profile integrations over a parameter grid");
    Options& o = *opts;
    app->add_option("--row", o.row, "Closed-form family 1-4");
    app->add_option("--values", o.values,
                    "Swept values, e.g. 'm=0.5,1,2;alpha_plus=0.1:1:10' (name=list or name=lo:hi:count)");
    add_constant_options(*app, o.constants);
    app->add_option("--s-start", o.s_start, "Seed position (default: the row's seed point)");
    app->add_option("--s-end", o.s_end, "End position (default: the row's end point)");
    app->add_option("--points", o.points, "Output samples per integration");
    app->add_option("--abs-tol", o.abs_tol, "Absolute tolerance");
    app->add_option("--rel-tol", o.rel_tol, "Relative tolerance");
    app->add_option("--pole-threshold", o.pole_threshold, "Halt once |chi| exceeds this");
    app->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
    app->add_option("--out", o.out, "Summary CSV");

    auto run = [opts, app](std::ostream& stream) {
        const Options& o = *opts;
        if (o.row < 1 || o.row > 4) throw ContractViolation("row must be 1, 2, 3 or 4");
        const std::vector<Axis> axes = parse_axes(o.values);

        // Cartesian product, last axis fastest.
        std::vector<std::vector<double>> tuples;
        std::size_t total = 1;
        for (const Axis& a : axes) total *= a.values.size();
        for (std::size_t t = 0; t < total; ++t) {
            std::vector<double> tuple(axes.size());
            std::size_t rem = t;
            for (std::size_t i = axes.size(); i-- > 0;) {
                tuple[i] = axes[i].values[rem % axes[i].values.size()];
                rem /= axes[i].values.size();
            }
            tuples.push_back(std::move(tuple));
        }

        std::vector<Outcome> outcomes(tuples.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < tuples.size(); i = next++) outcomes[i] = run_tuple(o, axes, tuples[i]);
        };
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned n_threads = static_cast<unsigned>(
            std::min<std::size_t>(o.threads == 0 ? hw : o.threads, std::max<std::size_t>(tuples.size(), 1)));
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        std::ofstream csv(o.out);
        if (!csv) throw ContractViolation("cannot write '" + o.out + "'");
        csv << "index,row";
        for (const Axis& a : axes) {
            if (a.name != "s_start" && a.name != "s_end") csv << ',' << a.name;
        }
        csv << ",s_start,s_end,status,halt_reason,s_halt,steps,compared,max_deviation,error\n";
        std::size_t ok = 0, halted = 0, errors = 0;
        double worst = 0.0;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            const Outcome& r = outcomes[t];
            csv << t << ',' << o.row;
            for (std::size_t i = 0; i < axes.size(); ++i) {
                if (axes[i].name != "s_start" && axes[i].name != "s_end") csv << ',' << format_double(tuples[t][i]);
            }
            csv << ',' << format_double(r.s_start) << ',' << format_double(r.s_end) << ',' << r.status << ','
                << r.halt_reason << ',' << format_double(r.s_halt) << ',' << r.steps << ',' << r.compared << ','
                << format_double(r.max_deviation) << ',' << r.error << '\n';
            ok += r.status == "ok";
            halted += r.status == "halted";
            errors += r.status == "error";
            if (r.status != "error") worst = std::max(worst, r.max_deviation);
        }
        write_sidecar(o.out, *app);

        Report report(stream);
        report_config(stream, *app);
        report.put("tuples", tuples.size());
        report.put("ok", ok);
        report.put("halted", halted);
        report.put("errors", errors);
        report.put("max_deviation", worst);
        return exit_ok;
    };
    return {app, run};
}

}  // namespace nldirac::cli
