#include "commands.hpp"
#include "model_options.hpp"

#include <nldirac/error.hpp>
#include <nldirac/models.hpp>
#include <nldirac/oracles.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <memory>

namespace nldirac::cli {

namespace {

struct Options {
    int row = 0;
    std::string assignment = "auto";
    std::array<std::optional<double>, 9> constants{};
    std::string field;
    ModelOptions model;
    double epsilon = 0.0;
    double wavenumber = 0.0;
    int stencil = 4;
    std::string edges = "one-sided";
    std::string boundary_first = "dirichlet";
    std::string boundary_second = "auto";
    double tol = 1e-10;
    bool report_only = false;
    std::string out;
};

int run_row(const Options& o, Report& report) {
    const AnalyticSolution sol(o.row, apply_overrides(o.constants));
    Assignment a;
    if (o.assignment == "auto") {
        a = verify_row(sol).assignment_used;
    } else if (o.assignment == "as-printed") {
        a = Assignment::as_printed;
    } else if (o.assignment == "swapped") {
        a = Assignment::swapped;
    } else {
        throw ContractViolation("unknown assignment '" + o.assignment + "' (auto, as-printed, swapped)");
    }
    const ReducedSystem sys = sol.system();
    report.put("mode", "row");
    report.put("row", o.row);
    report.put("model", to_string(sol.equation()));
    report.put("assignment", to_string(a));

    double linf = 0.0;
    double scaled = 0.0;
    const auto probes = default_probes(sol);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const AmplitudeJet jet = sol.evaluate(probes[i]);
        const Spinor chi = jet.chi(a);
        const Spinor dchi = jet.dchi(a);
        const Spinor r = sys.residual(probes[i], chi, dchi);
        const double mag = r.max_abs();
        const double rel = mag / sys.term_scale(probes[i], chi, dchi);
        const std::string key = "probe." + std::to_string(i) + ".";
        report.put(key + "s", probes[i]);
        report.put(key + "residual_plus", std::abs(r.plus));
        report.put(key + "residual_minus", std::abs(r.minus));
        report.put(key + "magnitude", mag);
        report.put(key + "scaled", rel);
        linf = std::max(linf, mag);
        scaled = std::max(scaled, rel);
    }
    report.put("summary.probes", probes.size());
    report.put("summary.linf", linf);
    report.put("summary.scaled_linf", scaled);
    const bool pass = scaled <= o.tol;
    report.put("summary.pass", pass);
    return pass || o.report_only ? exit_ok : exit_verification_failed;
}

template <Frame F>
double snapshot_residual(const ModelSpec& spec, const SpinorField<F>& s, double epsilon,
                         const DerivativeOperator& deriv, std::ostream* csv) {
    std::vector<Complex> dp(s.size()), dm(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        dp[k] = -I * epsilon * s.plus()[k];
        dm[k] = -I * epsilon * s.minus()[k];
    }
    const SpinorField<F> dt(s.grid(), std::move(dp), std::move(dm), s.time(), s.cyclic_wavenumber());
    const ResidualField r = residual(spec, s, dt, deriv);
    if (csv != nullptr) {
        const FieldGrid& g = s.grid();
        for (std::size_t i = 0; i < g.first_size(); ++i) {
            for (std::size_t j = 0; j < g.second_size(); ++j) {
                const std::size_t k = g.index(i, j);
                *csv << format_double(s.time()) << ',' << format_double(g.first().coordinate(i)) << ','
                     << format_double(g.second_coordinate(j)) << ',' << format_double(r.plus[k].real()) << ','
                     << format_double(r.plus[k].imag()) << ',' << format_double(r.minus[k].real()) << ','
                     << format_double(r.minus[k].imag()) << '\n';
            }
        }
    }
    return r.linf();
}

int run_field(const Options& o, Report& report) {
    const ModelSpec spec = o.model.build();
    std::ifstream in(o.field);
    if (!in) throw ContractViolation("cannot open field file '" + o.field + "'");
    FieldReadOptions ro;
    ro.first_boundary = parse_boundary(o.boundary_first);
    if (o.boundary_second != "auto") ro.second_boundary = parse_boundary(o.boundary_second);
    ro.cyclic_wavenumber = o.wavenumber;
    const FieldSeries series = read_field_csv(in, ro);

    if (o.edges != "zero-ghost" && o.edges != "one-sided") {
        throw ContractViolation("edges must be one-sided or zero-ghost");
    }
    const DerivativeOperator deriv(parse_stencil(o.stencil),
                                   o.edges == "zero-ghost" ? EdgeTreatment::zero_ghost : EdgeTreatment::one_sided);

    std::ofstream csv;
    if (!o.out.empty()) {
        csv.open(o.out);
        if (!csv) throw ContractViolation("cannot write '" + o.out + "'");
        csv << (series.coordinates == Coordinates::cartesian ? "t,x,y" : "t,r,theta")
            << ",re_res_plus,im_res_plus,re_res_minus,im_res_minus\n";
    }

    report.put("mode", "field");
    report.put("model", to_string(spec.equation()));
    report.put("snapshots", series.size());
    double linf = 0.0;
    for (std::size_t n = 0; n < series.size(); ++n) {
        const double r = series.coordinates == Coordinates::cartesian
                             ? snapshot_residual(spec, series.psi[n], o.epsilon, deriv, csv.is_open() ? &csv : nullptr)
                             : snapshot_residual(spec, series.phi[n], o.epsilon, deriv, csv.is_open() ? &csv : nullptr);
        const std::string key = "snapshot." + std::to_string(n) + ".";
        report.put(key + "t", series.coordinates == Coordinates::cartesian ? series.psi[n].time() : series.phi[n].time());
        report.put(key + "linf", r);
        linf = std::max(linf, r);
    }
    report.put("summary.linf", linf);
    const bool pass = linf <= o.tol;
    report.put("summary.pass", pass);
    return pass || o.report_only ? exit_ok : exit_verification_failed;
}

}  // namespace

Command add_residual(CLI::App& parent) {
    auto opts = std::make_shared<Options>();
    auto* app = parent.add_subcommand("residual", "Residuals of a closed-form row or of fields read from CSV");
    app->add_option("--row", opts->row, "Closed-form row 1-4 (exclusive with --field)");
    app->add_option("--assignment", opts->assignment, "Row mode: auto, as-printed or swapped");
    add_constant_options(*app, opts->constants, "row-");
    app->add_option("--field", opts->field, "Field CSV to evaluate");
    opts->model.add_to(*app, false);
    app->add_option("--epsilon", opts->epsilon, "Field mode: stationary energy, dt psi = -i epsilon psi");
    app->add_option("--wavenumber", opts->wavenumber, "Field mode: cyclic wavenumber of single-column files");
    app->add_option("--stencil", opts->stencil, "Finite-difference order, 2 or 4");
    app->add_option("--edges", opts->edges, "Dirichlet edges: one-sided or zero-ghost");
    app->add_option("--boundary-first", opts->boundary_first, "First axis: periodic, antiperiodic or dirichlet");
    app->add_option("--boundary-second", opts->boundary_second, "Second axis: auto, periodic, antiperiodic or dirichlet");
    app->add_option("--tol", opts->tol, "Pass threshold on the residual");
    app->add_flag("--report-only", opts->report_only, "Exit 0 whatever the residual");
    app->add_option("--out", opts->out, "Field mode: write residual components to this CSV");

    auto run = [opts, app](std::ostream& out) {
        const Options& o = *opts;
        if ((o.row != 0) == !o.field.empty()) throw ContractViolation("give exactly one of --row and --field");
        Report report(out);
        report_config(out, *app);
        if (o.row != 0) return run_row(o, report);
        if (o.model.model.empty()) throw ContractViolation("--field needs --model");
        const int code = run_field(o, report);
        if (!o.out.empty()) write_sidecar(o.out, *app);
        return code;
    };
    return {app, run};
}

}  // namespace nldirac::cli
