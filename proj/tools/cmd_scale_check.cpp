#include "commands.hpp"
#include "model_options.hpp"

#include <nldirac/scaling.hpp>

#include "CLI11.hpp"

#include <memory>

namespace nldirac::cli {

namespace {

struct Options {
    ModelOptions model;
    double lambda = 2.0;
    double tol = scale_tolerance;
};

void put_report(Report& report, const std::string& prefix, const ScaleCheckReport& r) {
    report.put(prefix + "mass", r.mass);
    report.put(prefix + "max_mismatch", r.max_mismatch);
    report.put(prefix + "mass_prediction", r.mass_prediction);
    report.put(prefix + "cubic_prediction", r.cubic_prediction);
    report.put(prefix + "unexplained", r.unexplained);
}

}  // namespace

Command add_scale_check(CLI::App& parent) {
    auto opts = std::make_shared<Options>();
    auto* app = parent.add_subcommand("scale-check", "Dilation covariance of the residual on analytic test fields");
    opts->model.add_to(*app);
    app->add_option("--lambda", opts->lambda, "Dilation factor");
    app->add_option("--tol", opts->tol, "Covariance threshold");

    auto run = [opts, app](std::ostream& out) {
        const Options& o = *opts;
        const ModelSpec spec = o.model.build();
        Report report(out);
        report_config(out, *app);

        const ScaleCheckReport r = scale_check(spec, o.lambda);
        report.put("model", to_string(r.model));
        report.put("lambda", r.lambda);
        report.put("field_weight", r.field_weight);
        report.put("probes", r.probe_count);
        report.put("conformal_model", r.conformal_model);
        put_report(report, "", r);

        // The mass term is the only admissible symmetry breaking: it must
        // account for the whole mismatch and the massless run must pass.
        ScaleCheckReport massless = r;
        if (spec.mass() != 0.0) {
            ModelSpec m0 = spec;
            m0.set_mass(0.0);
            massless = scale_check(m0, o.lambda);
            report.put("mass_broken", r.max_mismatch > o.tol);
            report.put("mass_accounts_for_mismatch", r.unexplained <= o.tol);
            put_report(report, "massless.", massless);
        }
        const bool covariant = massless.max_mismatch <= o.tol;
        report.put("covariant", covariant);
        if (r.cubic_prediction > 0.0) {
            report.put("cubic_margin_met", massless.max_mismatch >= massless.cubic_prediction * (1.0 - 1e-9));
        }
        return covariant ? exit_ok : exit_verification_failed;
    };
    return {app, run};
}

}  // namespace nldirac::cli
