#include "nldirac/transforms.hpp"

#include "nldirac/derivative.hpp"
#include "nldirac/error.hpp"

#include <cmath>

namespace nldirac {

GaugePhase gauge_phase(std::span<const double> u_tilde, const Grid1D& grid, double alpha_u,
                       GaugeQuadrature quadrature) {
    if (u_tilde.size() != grid.size()) throw ContractViolation("Ũ must be sampled on the gauge grid");
    if (grid.kind() != AxisKind::cartesian) throw ContractViolation("the gauge phase is defined along x");

    const double h = grid.spacing();
    std::vector<double> theta(grid.size(), 0.0);
    for (std::size_t j = 1; j < theta.size(); ++j) {
        theta[j] = theta[j - 1] + 0.5 * h * (u_tilde[j - 1] + u_tilde[j]);
    }

    if (quadrature == GaugeQuadrature::end_corrected) {
        std::vector<Complex> u(u_tilde.begin(), u_tilde.end());
        std::vector<Complex> du(u.size());
        DerivativeOperator(StencilOrder::fourth, EdgeTreatment::one_sided).apply_line(grid, u, du);
        const double d0 = du.front().real();
        for (std::size_t j = 1; j < theta.size(); ++j) {
            theta[j] -= h * h / 12.0 * (du[j].real() - d0);
        }
    }
    return {grid, std::move(theta), alpha_u};
}

GaugePhase gauge_phase(const SpinorState& state, double alpha_u, RadicandPolicy policy,
                       GaugeQuadrature quadrature) {
    if (state.grid().is_plane() || state.grid().coordinates() != Coordinates::cartesian) {
        throw ContractViolation("gauge elimination is implemented for y-independent (x-slice) states");
    }
    const CouplingFields c = compute_couplings(state, policy);
    return gauge_phase(c.u_tilde, state.grid().first(), alpha_u, quadrature);
}

namespace {

SpinorState multiply_phase(const SpinorState& state, const GaugePhase& phase, double sign) {
    if (state.grid().is_plane() || !(state.grid().first() == phase.grid)) {
        throw ContractViolation("gauge phase and state must share the same x grid");
    }
    std::vector<Complex> p(state.plus().begin(), state.plus().end());
    std::vector<Complex> m(state.minus().begin(), state.minus().end());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Complex f = std::polar(1.0, sign * phase.alpha_u * phase.theta[k]);
        p[k] *= f;
        m[k] *= f;
    }
    return SpinorState(state.grid(), std::move(p), std::move(m), state.time(), state.cyclic_wavenumber());
}

Boundary flipped(Boundary b) {
    switch (b) {
        case Boundary::periodic: return Boundary::antiperiodic;
        case Boundary::antiperiodic: return Boundary::periodic;
        case Boundary::dirichlet_zero: return Boundary::dirichlet_zero;
    }
    return b;
}

FieldGrid flip_azimuth(const FieldGrid& grid) {
    if (!grid.is_plane()) return grid;
    const Grid1D& th = *grid.second();
    return FieldGrid(grid.first(), th.with_boundary(flipped(th.boundary())));
}

// out± = scale(r) · e^{±i·sign·θ/2} · in±
template <Frame To, Frame From>
SpinorField<To> half_angle_map(const SpinorField<From>& in, double sign) {
    const FieldGrid& grid = in.grid();
    if (grid.coordinates() != Coordinates::cylindrical) {
        throw ContractViolation("the cylindrical spinor map needs an (r, θ) grid");
    }
    std::vector<Complex> p(in.size());
    std::vector<Complex> m(in.size());
    const auto ip = in.plus();
    const auto im = in.minus();
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        const double r = grid.first().coordinate(i);
        const double radial = sign > 0.0 ? std::sqrt(r) : 1.0 / std::sqrt(r);
        for (std::size_t j = 0; j < grid.second_size(); ++j) {
            const std::size_t k = grid.index(i, j);
            const double half = 0.5 * sign * grid.second_coordinate(j);
            p[k] = radial * std::polar(1.0, half) * ip[k];
            m[k] = radial * std::polar(1.0, -half) * im[k];
        }
    }
    return SpinorField<To>(flip_azimuth(grid), std::move(p), std::move(m), in.time(), in.cyclic_wavenumber());
}

}  // namespace

SpinorState apply_gauge(const SpinorState& state, const GaugePhase& phase) {
    return multiply_phase(state, phase, -1.0);
}

SpinorState remove_gauge(const SpinorState& state, const GaugePhase& phase) {
    return multiply_phase(state, phase, +1.0);
}

PhiState phi_from_psi(const SpinorState& state) {
    return half_angle_map<Frame::phi>(state, +1.0);
}

SpinorState psi_from_phi(const PhiState& state) {
    return half_angle_map<Frame::psi>(state, -1.0);
}

}  // namespace nldirac
