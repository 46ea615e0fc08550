#pragma once

#include <nldirac/models.hpp>

#include <array>
#include <optional>
#include <string>

namespace CLI {
class App;
}

namespace nldirac::cli {

/// --model, --mass, --policy and one option per coupling constant.
struct ModelOptions {
    std::string model;
    double mass = 0.0;
    std::string policy = "signed-sqrt";
    std::array<std::optional<double>, 8> couplings{};

    static constexpr std::array<std::string_view, 8> coupling_names{
        "alpha_s", "alpha_v", "alpha_u", "alpha_w", "alpha_plus", "alpha_minus", "beta_plus", "beta_minus"};

    void add_to(CLI::App& app, bool model_required = true);

    /// Throws ContractViolation for an unknown model or policy, or a coupling
    /// the model does not have.
    ModelSpec build() const;
};

EquationId parse_model(const std::string& name);
RadicandPolicy parse_policy(const std::string& name);

/// periodic, antiperiodic or dirichlet.
Boundary parse_boundary(const std::string& name);

/// Stencil order 2 or 4.
StencilOrder parse_stencil(int order);

}  // namespace nldirac::cli
