#include "commands.hpp"
#include "model_options.hpp"

#include <nldirac/error.hpp>
#include <nldirac/evolve.hpp>
#include <nldirac/transforms.hpp>

#include "CLI11.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>

namespace nldirac::cli {

namespace {

struct Options {
    ModelOptions model;
    int dims = 2;
    std::size_t n = 64;
    std::size_t n_second = 0;
    double lo = -8.0;
    double hi = 8.0;
    std::string boundary = "periodic";
    double r_min = 0.5;
    double r_max = 8.5;

    std::string init = "gaussian";
    std::string init_file;
    double width = 1.5;
    double center_x = 0.0;
    double center_y = 0.0;
    double amp_plus = 1.0;
    double amp_minus = 0.5;
    double phase_plus = 0.0;
    double phase_minus = 0.0;
    int mode = 1;
    int mode_y = 0;
    double wavenumber = 0.0;

    std::string scheme = "rk4-fixed";
    double dt = 0.0;
    double cfl = 0.5;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double blowup = 1e8;
    int stencil = 4;
    double t_final = 1.0;
    std::size_t sample_every = 10;
    std::string out_dir = ".";
};

Spinor gaussian(const Options& o, double x, double y) {
    const double g = std::exp(-((x - o.center_x) * (x - o.center_x) + (y - o.center_y) * (y - o.center_y)) /
                              (o.width * o.width));
    return {std::polar(o.amp_plus * g, o.phase_plus), std::polar(o.amp_minus * g, o.phase_minus)};
}

FieldGrid cartesian_grid(const Options& o) {
    const Grid1D x = Grid1D::cartesian(o.n, o.lo, o.hi, parse_boundary(o.boundary));
    if (o.dims == 1) return FieldGrid(x);
    return FieldGrid(x, Grid1D::cartesian(o.n_second == 0 ? o.n : o.n_second, o.lo, o.hi, parse_boundary(o.boundary)));
}

SpinorState cartesian_initial(const Options& o, const ModelSpec& spec) {
    const FieldGrid grid = cartesian_grid(o);
    if (o.init == "gaussian") {
        return SpinorState::sample(grid, [&](double x, double y) { return gaussian(o, x, y); }, 0.0, o.wavenumber);
    }
    if (o.init != "plane-wave") throw ContractViolation("unknown init '" + o.init + "' (gaussian, plane-wave, file)");
    if (grid.first().boundary() != Boundary::periodic) throw ContractViolation("plane-wave init needs a periodic grid");
    // Positive-energy eigenvector of the free symbol [[m, k + iq], [k − iq, −m]].
    const double q = 2.0 * std::numbers::pi * o.mode / grid.first().length();
    const double k = o.dims == 1 ? o.wavenumber : 2.0 * std::numbers::pi * o.mode_y / grid.first().length();
    const double m = spec.mass();
    const double e = std::sqrt(m * m + q * q + k * k);
    if (e == 0.0) throw ContractViolation("plane-wave init needs a nonzero wavevector or mass");
    const Complex partner = Complex(k, -q) / (e + m);
    const double a = o.amp_plus / std::sqrt(1.0 + std::norm(partner));
    return SpinorState::sample(
        grid,
        [&](double x, double y) {
            const Complex w = std::polar(a, q * x + (o.dims == 1 ? 0.0 : k * y));
            return Spinor{w, partner * w};
        },
        0.0, o.dims == 1 ? k : 0.0);
}

PhiState cylindrical_initial(const Options& o) {
    const Grid1D r = Grid1D::radial(o.n, o.r_min, o.r_max);
    if (o.init != "gaussian") throw ContractViolation("cylindrical runs support gaussian or file init");
    if (o.dims == 1) {
        return PhiState::sample(FieldGrid(r), [&](double s, double) { return gaussian(o, s, 0.0); }, 0.0, o.wavenumber);
    }
    // A Gaussian in the plane, mapped to the φ frame.
    const FieldGrid grid(r, Grid1D::azimuthal(o.n_second == 0 ? o.n : o.n_second));
    const SpinorState psi = SpinorState::sample(grid, [&](double rr, double th) {
        return gaussian(o, rr * std::cos(th), rr * std::sin(th));
    });
    return phi_from_psi(psi);
}

template <Frame F>
int run_evolution(const Options& o, const ModelSpec& spec, const SpinorField<F>& initial, const CLI::App& app,
                  Report& report) {
    Integrator integ;
    const auto scheme = parse_scheme(o.scheme);
    if (!scheme) throw ContractViolation("unknown scheme '" + o.scheme + "' (rk4-fixed, rk45-adaptive)");
    integ.scheme = *scheme;
    integ.dt = o.dt;
    integ.cfl_factor = o.cfl;
    integ.abs_tol = o.abs_tol;
    integ.rel_tol = o.rel_tol;
    integ.blowup_threshold = o.blowup;
    const DerivativeOperator deriv(parse_stencil(o.stencil), EdgeTreatment::zero_ghost);

    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream fields(dir / "fields.csv");
    std::ofstream diags(dir / "diagnostics.csv");
    if (!fields || !diags) throw ContractViolation("cannot write outputs in '" + o.out_dir + "'");
    write_sidecar((dir / "run").string(), app);
    write_field_header(fields, initial.grid().coordinates());
    write_diagnostics_header(diags);

    DiagnosticsRecord first{}, last{};
    double drift = 0.0;
    std::size_t samples = 0;
    auto observer = [&](const SpinorField<F>& s, const DiagnosticsRecord& d) {
        if (samples == 0) first = d;
        last = d;
        ++samples;
        if (first.norm > 0.0) drift = std::max(drift, std::abs(d.norm - first.norm) / first.norm);
        write_field_rows(fields, s);
        write_diagnostics_row(diags, d);
        fields.flush();
        diags.flush();
    };

    report.put("model", to_string(spec.equation()));
    report.put("coordinates", to_string(initial.grid().coordinates()));
    report.put("points", initial.size());
    report.put("cfl_limit", integ.cfl_limit(initial.grid()));
    bool truncated = false;
    try {
        evolve(spec, initial, o.t_final, integ, deriv, o.sample_every, EvolveObserver<F>(observer));
    } catch (const NumericalFailure& e) {
        truncated = true;
        fields << "# truncated: " << e.what() << '\n';
        diags << "# truncated: " << e.what() << '\n';
        report.put("failure", e.what());
        report.put("failure_step", e.step());
        report.put("failure_time", e.time());
    }
    report.put("samples", samples);
    report.put("steps", last.step_count);
    report.put("t_end", last.time);
    report.put("norm_initial", first.norm);
    report.put("norm_final", last.norm);
    report.put("norm_drift", drift);
    report.put("max_abs_final", last.max_amplitude);
    report.put("truncated", truncated);
    return truncated ? exit_numerical_failure : exit_ok;
}

}  // namespace

Command add_evolve(CLI::App& parent) {
    auto opts = std::make_shared<Options>();
    auto* app = parent.add_subcommand("evolve", "Method-of-lines time evolution with norm diagnostics");
    Options& o = *opts;
    o.model.add_to(*app);
    app->add_option("--dims", o.dims, "1 (slice carrying --wavenumber) or 2");
    app->add_option("--n", o.n, "Points along the first axis");
    app->add_option("--n-second", o.n_second, "Points along the second axis (0: same as --n)");
    app->add_option("--lo", o.lo, "Cartesian lower bound (both axes)");
    app->add_option("--hi", o.hi, "Cartesian upper bound (both axes)");
    app->add_option("--boundary", o.boundary, "Cartesian boundary: periodic or dirichlet");
    app->add_option("--r-min", o.r_min, "Cylindrical inner radius");
    app->add_option("--r-max", o.r_max, "Cylindrical outer radius");
    app->add_option("--init", o.init, "gaussian, plane-wave or file");
    app->add_option("--init-file", o.init_file, "Field CSV whose first snapshot is the initial state");
    app->add_option("--width", o.width, "Gaussian width");
    app->add_option("--center-x", o.center_x, "Gaussian centre x");
    app->add_option("--center-y", o.center_y, "Gaussian centre y");
    app->add_option("--amp-plus", o.amp_plus, "Amplitude of the + component");
    app->add_option("--amp-minus", o.amp_minus, "Gaussian amplitude of the - component");
    app->add_option("--phase-plus", o.phase_plus, "Gaussian phase of the + component (radians)");
    app->add_option("--phase-minus", o.phase_minus, "Gaussian phase of the - component (radians)");
    app->add_option("--mode", o.mode, "Plane wave: periods across the first axis");
    app->add_option("--mode-y", o.mode_y, "Plane wave: periods across the second axis");
    app->add_option("--wavenumber", o.wavenumber, "Cyclic wavenumber of 1D slice runs");
    app->add_option("--scheme", o.scheme, "rk4-fixed or rk45-adaptive");
    app->add_option("--dt", o.dt, "rk4 step (0: CFL ceiling)");
    app->add_option("--cfl", o.cfl, "CFL factor");
    app->add_option("--abs-tol", o.abs_tol, "rk45 absolute tolerance");
    app->add_option("--rel-tol", o.rel_tol, "rk45 relative tolerance");
    app->add_option("--blowup", o.blowup, "Abort once any amplitude exceeds this");
    app->add_option("--stencil", o.stencil, "Finite-difference order, 2 or 4");
    app->add_option("--t-final", o.t_final, "End time");
    app->add_option("--sample-every", o.sample_every, "Write every n-th step (and the last)");
    app->add_option("--out-dir", o.out_dir, "Directory for fields.csv, diagnostics.csv and run.config");

    auto run = [opts, app](std::ostream& out) {
        const Options& o = *opts;
        const ModelSpec spec = o.model.build();
        if (o.dims != 1 && o.dims != 2) throw ContractViolation("dims must be 1 or 2");
        Report report(out);
        report_config(out, *app);

        if (o.init == "file") {
            std::ifstream in(o.init_file);
            if (!in) throw ContractViolation("cannot open init file '" + o.init_file + "'");
            FieldReadOptions ro;
            ro.first_boundary = spec.coordinates() == Coordinates::cartesian ? parse_boundary(o.boundary)
                                                                             : Boundary::dirichlet_zero;
            if (spec.coordinates() == Coordinates::cartesian) ro.second_boundary = parse_boundary(o.boundary);
            ro.cyclic_wavenumber = o.wavenumber;
            const FieldSeries series = read_field_csv(in, ro);
            if (series.coordinates != spec.coordinates()) {
                throw ContractViolation("init file coordinates do not match the model");
            }
            if (series.coordinates == Coordinates::cartesian) {
                return run_evolution(o, spec, series.psi.front().with_time(0.0), *app, report);
            }
            return run_evolution(o, spec, series.phi.front().with_time(0.0), *app, report);
        }
        if (spec.coordinates() == Coordinates::cartesian) {
            return run_evolution(o, spec, cartesian_initial(o, spec), *app, report);
        }
        return run_evolution(o, spec, cylindrical_initial(o), *app, report);
    };
    return {app, run};
}

}  // namespace nldirac::cli
