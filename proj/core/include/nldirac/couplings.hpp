#pragma once

#include "nldirac/spinor.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace nldirac {

/// What to do with a negative radicand under the square roots of the
/// self-interaction couplings.
enum class RadicandPolicy {
    signed_sqrt,        ///< u ↦ sgn(u)·√|u| (default)
    clamp_to_zero,      ///< negative u ↦ 0
    error_on_negative,  ///< throw RadicandError
};

std::string_view to_string(RadicandPolicy policy);

/// Radicands of the four couplings: ψ̄ψ, ψ̄γ₀ψ, ψ̄γ₁ψ, ψ̄γ₂ψ.
struct Radicands {
    double scalar;   // |ψ₊|² − |ψ₋|²
    double vector0;  // |ψ₊|² + |ψ₋|²
    double vector1;  // i(ψ₊*ψ₋ − ψ₊ψ₋*) = −2 Im(ψ₊*ψ₋)
    double vector2;  // ψ₊*ψ₋ + ψ₊ψ₋* = 2 Re(ψ₊*ψ₋)
};

/// (S̃, Ṽ, Ũ, W̃) at one point.
struct CouplingValues {
    double s_tilde;
    double v_tilde;
    double u_tilde;
    double w_tilde;
};

/// Relative size of the imaginary residue tolerated in the Ũ and W̃
/// radicands when they are formed in complex arithmetic.
inline constexpr double radicand_imag_tolerance = 1e-12;

/// Radicands formed exactly as written (complex products), with the
/// imaginary residue of the two vector radicands checked.
Radicands radicands(const Spinor& psi);

/// Square root under `policy`. `index` is reported by RadicandError.
double policy_root(double radicand, RadicandPolicy policy, std::size_t index = 0);

CouplingValues couplings_at(const Spinor& psi, RadicandPolicy policy, std::size_t index = 0);

/// Pointwise coupling fields of a state.
struct CouplingFields {
    std::vector<double> s_tilde;
    std::vector<double> v_tilde;
    std::vector<double> u_tilde;
    std::vector<double> w_tilde;
};

template <Frame F>
CouplingFields compute_couplings(const SpinorField<F>& state,
                                 RadicandPolicy policy = RadicandPolicy::signed_sqrt);

}  // namespace nldirac
