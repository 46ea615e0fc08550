#pragma once

#include "nldirac/couplings.hpp"
#include "nldirac/derivative.hpp"
#include "nldirac/grid.hpp"
#include "nldirac/spinor.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nldirac {

/// The ten nonlinear Dirac models. eq10/eq11a/eq11b/eq13 are written in the
/// cylindrical φ frame, the rest in Cartesian ψ.
enum class EquationId { eq5, eq7, eq8a, eq8b, eq9, eq10, eq11a, eq11b, eq12, eq13 };

inline constexpr std::array<EquationId, 10> all_equations{
    EquationId::eq5,  EquationId::eq7,   EquationId::eq8a,  EquationId::eq8b, EquationId::eq9,
    EquationId::eq10, EquationId::eq11a, EquationId::eq11b, EquationId::eq12, EquationId::eq13};

std::string_view to_string(EquationId id);
std::optional<EquationId> parse_equation_id(std::string_view name);

/// eq9's couplings carry a length dimension; all others are dimensionless.
enum class CouplingUnits { dimensionless, length };

/// Which equation, its mass, coupling constants and radicand policy.
///
/// Coupling names per equation:
///   eq5:                               alpha_s alpha_v alpha_u alpha_w
///   eq7, eq10:                         alpha_s alpha_v alpha_w
///   eq8a eq8b eq11a eq11b eq12 eq13:   alpha_plus alpha_minus beta_plus beta_minus
///   eq9:                               alpha_plus alpha_minus alpha_w
class ModelSpec {
public:
    explicit ModelSpec(EquationId id, double mass = 0.0,
                       RadicandPolicy policy = RadicandPolicy::signed_sqrt);

    EquationId equation() const noexcept { return id_; }
    Coordinates coordinates() const noexcept;
    Frame frame() const noexcept;
    CouplingUnits coupling_units() const noexcept;
    double mass() const noexcept { return mass_; }
    RadicandPolicy policy() const noexcept { return policy_; }

    std::span<const std::string_view> parameter_names() const noexcept;
    bool has_parameter(std::string_view name) const noexcept;

    /// Value of a named coupling; throws ContractViolation for names the
    /// equation does not have.
    double parameter(std::string_view name) const;

    /// Like `parameter` but 0 for couplings the equation does not have.
    double parameter_or_zero(std::string_view name) const noexcept;

    ModelSpec& set(std::string_view name, double value);
    ModelSpec& set_mass(double m);
    ModelSpec& set_policy(RadicandPolicy p) noexcept { policy_ = p; return *this; }

    /// Same equation and policy with every coupling set to zero.
    ModelSpec linear_limit() const;
    bool is_linear() const noexcept;

private:
    EquationId id_;
    double mass_;
    RadicandPolicy policy_;
    std::array<double, 4> params_{};
};

/// Field-dependent 2×2 part of H (mass plus self-interaction), no derivatives.
struct LocalMatrix {
    Complex h11;
    Complex h12;
    Complex h21;
    Complex h22;

    Spinor operator*(const Spinor& v) const {
        return {h11 * v.plus + h12 * v.minus, h21 * v.plus + h22 * v.minus};
    }
};

/// Field values and first spatial partials at one point. `d_first` is ∂x
/// (or ∂r), `d_second` is ∂y (or ∂θ). `radius` is only read by cylindrical
/// models.
struct PointJet {
    Spinor value;
    Spinor d_first;
    Spinor d_second;
    double radius = 1.0;
};

LocalMatrix local_matrix(const ModelSpec& spec, const Spinor& value, double radius = 1.0,
                         std::size_t index = 0);

/// Only the self-interaction part of `local_matrix` (mass removed).
LocalMatrix nonlinear_matrix(const ModelSpec& spec, const Spinor& value, double radius = 1.0,
                             std::size_t index = 0);

/// H(ψ)ψ at a point.
Spinor apply_hamiltonian(const ModelSpec& spec, const PointJet& jet, std::size_t index = 0);

/// i∂ₜψ − H(ψ)ψ at a point.
Spinor pointwise_residual(const ModelSpec& spec, const PointJet& jet, const Spinor& time_derivative,
                          std::size_t index = 0);

struct HermiticityClass {
    EquationId equation;
    bool is_hermitian;
};

/// Whether H(ψ) = H(ψ)† for every state. Only eq8a fails: its two
/// off-diagonal entries are the same complex β₊ψ₊ + β₋ψ₋.
HermiticityClass hermiticity(const ModelSpec& spec);
bool is_hermitian(EquationId id) noexcept;

/// Whether ψ = e^{-iεt}χ separates (eq7, eq10, eq12, eq13).
bool is_time_separable(EquationId id) noexcept;

/// H(ψ)ψ over a whole grid, written into `out_plus`/`out_minus`.
void apply_hamiltonian(const ModelSpec& spec, const FieldGrid& grid, double cyclic_wavenumber,
                       std::span<const Complex> plus, std::span<const Complex> minus,
                       const DerivativeOperator& deriv, std::span<Complex> out_plus,
                       std::span<Complex> out_minus);

/// Throws ContractViolation unless the model's coordinates and frame match.
void check_compatible(const ModelSpec& spec, const FieldGrid& grid, Frame frame);

/// ∂ₜψ = −i H(ψ)ψ.
template <Frame F>
SpinorField<F> rhs(const ModelSpec& spec, const SpinorField<F>& state, const DerivativeOperator& deriv);

struct ResidualField {
    std::vector<Complex> plus;
    std::vector<Complex> minus;

    double linf() const noexcept;
};

/// R = i·∂ₜψ − H(ψ)ψ with the time derivative supplied by the caller.
template <Frame F>
ResidualField residual(const ModelSpec& spec, const SpinorField<F>& state,
                       const SpinorField<F>& time_derivative, const DerivativeOperator& deriv);

}  // namespace nldirac
