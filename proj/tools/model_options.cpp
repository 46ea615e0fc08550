#include "model_options.hpp"

#include <nldirac/error.hpp>

#include "CLI11.hpp"

namespace nldirac::cli {

EquationId parse_model(const std::string& name) {
    if (auto id = parse_equation_id(name)) return *id;
    throw ContractViolation("unknown model '" + name + "'");
}

RadicandPolicy parse_policy(const std::string& name) {
    for (auto p : {RadicandPolicy::signed_sqrt, RadicandPolicy::clamp_to_zero, RadicandPolicy::error_on_negative}) {
        if (to_string(p) == name) return p;
    }
    throw ContractViolation("unknown radicand policy '" + name + "'");
}

Boundary parse_boundary(const std::string& name) {
    if (name == "periodic") return Boundary::periodic;
    if (name == "antiperiodic") return Boundary::antiperiodic;
    if (name == "dirichlet") return Boundary::dirichlet_zero;
    throw ContractViolation("unknown boundary '" + name + "' (periodic, antiperiodic, dirichlet)");
}

StencilOrder parse_stencil(int order) {
    if (order == 2) return StencilOrder::second;
    if (order == 4) return StencilOrder::fourth;
    throw ContractViolation("stencil must be 2 or 4");
}

void ModelOptions::add_to(CLI::App& app, bool model_required) {
    auto* m = app.add_option("--model", model, "Equation: eq5 eq7 eq8a eq8b eq9 eq10 eq11a eq11b eq12 eq13");
    if (model_required) m->required();
    app.add_option("--mass", mass, "Mass m");
    app.add_option("--policy", policy, "Radicand policy: signed-sqrt, clamp-to-zero, error-on-negative");
    for (std::size_t i = 0; i < coupling_names.size(); ++i) {
        std::string flag = "--" + std::string(coupling_names[i]);
        std::replace(flag.begin(), flag.end(), '_', '-');
        app.add_option(flag, couplings[i], "Coupling " + std::string(coupling_names[i]));
    }
}

ModelSpec ModelOptions::build() const {
    ModelSpec spec(parse_model(model), mass, parse_policy(policy));
    for (std::size_t i = 0; i < coupling_names.size(); ++i) {
        if (couplings[i]) spec.set(coupling_names[i], *couplings[i]);
    }
    return spec;
}

}  // namespace nldirac::cli
