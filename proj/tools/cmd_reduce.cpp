#include "commands.hpp"
#include "model_options.hpp"

#include <nldirac/error.hpp>
#include <nldirac/odesolve.hpp>
#include <nldirac/oracles.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <memory>

namespace nldirac::cli {

namespace {

struct Options {
    int row = 0;
    std::array<std::optional<double>, 9> constants{};
    ModelOptions model;
    double epsilon = 0.0;
    double wavenumber = 0.0;
    std::optional<double> s_start;
    std::optional<double> s_end;
    double seed_plus_re = 0.0;
    double seed_plus_im = 0.0;
    double seed_minus_re = 0.0;
    double seed_minus_im = 0.0;
    std::size_t points = 201;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double pole_threshold = 1e8;
    std::string out = "profile.csv";
};

}  // namespace

Command add_reduce(CLI::App& parent) {
    auto opts = std::make_shared<Options>();
    auto* app = parent.add_subcommand("reduce", "Integrate a stationary reduced system from a seed point");
    Options& o = *opts;
    app->add_option("--row", o.row, "Seed from closed-form row 1-4 and use its system");
    add_constant_options(*app, o.constants, "row-");
    o.model.add_to(*app, false);
    app->add_option("--epsilon", o.epsilon, "Energy (model mode)");
    app->add_option("--wavenumber", o.wavenumber, "k or kappa (model mode)");
    app->add_option("--s-start", o.s_start, "Seed position (row mode default: the row's seed point)");
    app->add_option("--s-end", o.s_end, "End position (row mode default: the row's end point)");
    app->add_option("--seed-plus-re", o.seed_plus_re, "Model mode seed");
    app->add_option("--seed-plus-im", o.seed_plus_im, "Model mode seed");
    app->add_option("--seed-minus-re", o.seed_minus_re, "Model mode seed");
    app->add_option("--seed-minus-im", o.seed_minus_im, "Model mode seed");
    app->add_option("--points", o.points, "Uniform output samples");
    app->add_option("--abs-tol", o.abs_tol, "Absolute tolerance");
    app->add_option("--rel-tol", o.rel_tol, "Relative tolerance");
    app->add_option("--pole-threshold", o.pole_threshold, "Halt once |chi| exceeds this");
    app->add_option("--out", o.out, "Profile CSV (field schema, one line of the lifted state)");

    auto run = [opts, app](std::ostream& out) {
        const Options& o = *opts;
        Report report(out);
        report_config(out, *app);

        std::optional<AnalyticSolution> sol;
        std::optional<ReducedSystem> system;
        Assignment assignment = Assignment::as_printed;
        double s0 = 0.0;
        double s1 = 0.0;
        Spinor seed{{o.seed_plus_re, o.seed_plus_im}, {o.seed_minus_re, o.seed_minus_im}};
        if (o.row != 0) {
            sol.emplace(o.row, apply_overrides(o.constants));
            system.emplace(sol->system());
            assignment = verify_row(*sol).assignment_used;
            const Interval span = default_ivp_span(*sol);
            s0 = o.s_start.value_or(span.lo);
            s1 = o.s_end.value_or(span.hi);
            seed = sol->evaluate(s0).chi(assignment);
            report.put("row", o.row);
            report.put("assignment", to_string(assignment));
        } else {
            if (o.model.model.empty()) throw ContractViolation("give --row or --model");
            if (!o.s_start || !o.s_end) throw ContractViolation("model mode needs --s-start and --s-end");
            system.emplace(reduce(o.model.build(), o.epsilon, o.wavenumber));
            s0 = *o.s_start;
            s1 = *o.s_end;
        }
        report.put("model", to_string(system->model().equation()));
        report.put("s_start", s0);
        report.put("s_end", s1);

        IvpProblem problem{*system, s0, s1, seed};
        problem.abs_tol = o.abs_tol;
        problem.rel_tol = o.rel_tol;
        problem.pole_threshold = o.pole_threshold;
        problem.output_points = o.points;
        const IvpResult result = integrate(problem);
        report.put("halt_reason", to_string(result.reason));
        report.put("s_halt", result.s_halt);
        report.put("steps", result.steps);
        report.put("samples", result.s.size());

        if (sol) {
            double dev = 0.0;
            std::size_t compared = 0;
            for (std::size_t i = 0; i < result.s.size(); ++i) {
                if (!sol->domain().contains(result.s[i]) && !(sol->row() == 4 && result.s[i] == 0.0)) continue;
                dev = std::max(dev, (result.chi[i] - sol->evaluate(result.s[i]).chi(assignment)).max_abs());
                ++compared;
            }
            report.put("compared", compared);
            report.put("max_deviation", dev);
        }

        bool written = false;
        if (result.s.size() >= Grid1D::min_points) {
            const ReducedProfile profile = result.profile();
            std::ofstream csv(o.out);
            if (!csv) throw ContractViolation("cannot write '" + o.out + "'");
            const ModelSpec& spec = system->model();
            write_field_header(csv, spec.coordinates());
            if (spec.coordinates() == Coordinates::cartesian) {
                write_field_rows(csv, lift_to_line(profile, spec, 0.0));
            } else {
                write_field_rows(csv, lift_to_ray(profile, spec, 0.0));
            }
            write_sidecar(o.out, *app);
            written = true;
        }
        report.put("profile_written", written);
        return exit_ok;
    };
    return {app, run};
}

}  // namespace nldirac::cli
