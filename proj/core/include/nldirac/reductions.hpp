#pragma once

#include "nldirac/grid.hpp"
#include "nldirac/models.hpp"
#include "nldirac/spinor.hpp"

#include <span>
#include <vector>

namespace nldirac {

/// One-dimensional profile (χ₊(s), χ₋(s)) with its quantum numbers.
///
/// Cartesian: ψ±(t, x, y) = e^{i(ky − εt)} χ±(x).
/// Cylindrical: φ±(t, r, θ) = e^{i(κθ − εt)} χ±(r), so that
/// ψ = r^{−1/2} e^{−iθσ₃/2} φ. A single azimuthal number κ is used for both
/// components.
struct ReducedProfile {
    Grid1D grid;
    std::vector<Complex> chi_plus;
    std::vector<Complex> chi_minus;
    double epsilon = 0.0;
    double wavenumber = 0.0;  ///< k (Cartesian) or κ (cylindrical)

    Spinor at(std::size_t i) const { return {chi_plus[i], chi_minus[i]}; }
};

/// χ′ samples matching a profile's grid.
struct ProfileDerivatives {
    std::vector<Complex> d_plus;
    std::vector<Complex> d_minus;
};

/// The stationary, cyclic-coordinate reduction of a separable model: two
/// first-order ODEs in s = x or r.
///
/// The reduced residual is the full pointwise residual evaluated on the
/// ansatz at t = 0 on the y = 0 (θ = 0) line, where the common phase is 1:
/// ∂ₜ → −iε, ∂y → ik (∂θ → iκ).
class ReducedSystem {
public:
    ReducedSystem(ModelSpec model, double epsilon, double wavenumber);

    const ModelSpec& model() const noexcept { return model_; }
    double epsilon() const noexcept { return epsilon_; }
    double wavenumber() const noexcept { return wavenumber_; }
    Coordinates coordinates() const noexcept { return model_.coordinates(); }

    /// (R₊, R₋) at s given χ and χ′.
    Spinor residual(double s, const Spinor& chi, const Spinor& dchi, std::size_t index = 0) const;

    /// Explicit form χ′ = F(s, χ). Every reduced system contains χ₋′ only in
    /// R₊ (coefficient −1) and χ₊′ only in R₋ (coefficient +1).
    Spinor derivative(double s, const Spinor& chi) const;

    /// Largest single term in either equation at s, at least 1. Used to
    /// judge residuals near poles where the fields themselves diverge.
    double term_scale(double s, const Spinor& chi, const Spinor& dchi) const;

private:
    ModelSpec model_;
    double epsilon_;
    double wavenumber_;
};

/// Substitute the stationary ansatz into eq7, eq10, eq12 or eq13.
/// Throws UnsupportedModelError for models that do not separate in time.
ReducedSystem reduce(const ModelSpec& model, double epsilon, double wavenumber);

/// Points excluded from a residual window: anything within
/// `margin_spacings`·h of a singular point.
struct ResidualWindow {
    std::vector<double> singular_points;
    double margin_spacings = 10.0;
};

/// L∞ of (R₊, R₋) over the profile's interior points with the given χ′.
double reduced_residual(const ReducedSystem& system, const ReducedProfile& profile,
                        const ProfileDerivatives& derivatives, const ResidualWindow& window = {});

/// Same, with χ′ from fourth-order finite differences (one-sided at edges).
double reduced_residual(const ReducedSystem& system, const ReducedProfile& profile,
                        const ResidualWindow& window = {});

ProfileDerivatives finite_difference_derivatives(const ReducedProfile& profile,
                                                 StencilOrder order = StencilOrder::fourth);

/// ψ(t, x, y) = e^{i(ky − εt)} χ(x) on the plane (profile grid) × y_axis.
/// A periodic y axis requires k·L_y ∈ 2πℤ.
SpinorState lift_to_plane(const ReducedProfile& profile, const ModelSpec& model, const Grid1D& y_axis,
                          double t);

/// φ(t, r, θ) = e^{i(κθ − εt)} χ(r). On a closed θ axis φ is antiperiodic
/// and κ must be half-odd (±1/2, ±3/2, ...); open sectors take any κ.
PhiState lift_to_disk(const ReducedProfile& profile, const ModelSpec& model, const Grid1D& theta_axis,
                      double t);

/// The y = 0 line of lift_to_plane as a slice field carrying k.
SpinorState lift_to_line(const ReducedProfile& profile, const ModelSpec& model, double t);

/// The θ = 0 ray of lift_to_disk as a slice field carrying κ.
PhiState lift_to_ray(const ReducedProfile& profile, const ModelSpec& model, double t);

bool is_half_odd(double kappa) noexcept;

/// det of the 2×2 map χ ↦ R for plane-wave profiles χ ∝ e^{iqx} in the
/// linear limit of a Cartesian separable model, built by probing the
/// reduced residual with basis spinors.
double linear_dispersion_determinant(const ModelSpec& model, double epsilon, double q, double k);

/// Real roots ε of linear_dispersion_determinant, ascending.
std::vector<double> linear_dispersion_energies(const ModelSpec& model, double q, double k);

}  // namespace nldirac
