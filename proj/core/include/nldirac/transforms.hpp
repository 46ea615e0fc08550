#pragma once

#include "nldirac/couplings.hpp"
#include "nldirac/grid.hpp"
#include "nldirac/spinor.hpp"

#include <span>
#include <vector>

namespace nldirac {

enum class GaugeQuadrature {
    trapezoid,      ///< cumulative trapezoid, O(h²)
    end_corrected,  ///< trapezoid minus h²/12·(Ũ′(x) − Ũ′(x_min)), O(h⁴)
};

/// θ(x) with ∂ₓθ = Ũ and θ(x_min) = 0, together with the coupling α_U.
struct GaugePhase {
    Grid1D grid;
    std::vector<double> theta;
    double alpha_u;
};

GaugePhase gauge_phase(std::span<const double> u_tilde, const Grid1D& grid, double alpha_u,
                       GaugeQuadrature quadrature = GaugeQuadrature::trapezoid);

/// θ built from the Ũ coupling of a y-independent (slice) state.
GaugePhase gauge_phase(const SpinorState& state, double alpha_u,
                       RadicandPolicy policy = RadicandPolicy::signed_sqrt,
                       GaugeQuadrature quadrature = GaugeQuadrature::trapezoid);

/// ψ ↦ e^{−iα_Uθ}ψ. Maps a field of the Ũ-free model (eq7) to the
/// corresponding field of the full model (eq5).
SpinorState apply_gauge(const SpinorState& state, const GaugePhase& phase);

/// ψ ↦ e^{+iα_Uθ}ψ, the inverse of apply_gauge: the gauged field whose eq7
/// residual matches the eq5 residual of `state`.
SpinorState remove_gauge(const SpinorState& state, const GaugePhase& phase);

/// φ± = √r e^{±iθ/2} ψ±. A 2π-periodic θ axis becomes antiperiodic.
PhiState phi_from_psi(const SpinorState& state);

/// ψ± = e^{∓iθ/2} φ± / √r.
SpinorState psi_from_phi(const PhiState& state);

}  // namespace nldirac
