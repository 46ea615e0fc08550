#include "nldirac/reductions.hpp"

#include "nldirac/derivative.hpp"
#include "nldirac/error.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace nldirac {

ReducedSystem::ReducedSystem(ModelSpec model, double epsilon, double wavenumber)
    : model_(std::move(model)), epsilon_(epsilon), wavenumber_(wavenumber) {
    if (!is_time_separable(model_.equation())) {
        throw UnsupportedModelError(
            std::string(to_string(model_.equation())) +
            " does not separate under ψ = e^{-iεt}χ; only eq7, eq10, eq12 and eq13 reduce");
    }
    if (!std::isfinite(epsilon) || !std::isfinite(wavenumber)) {
        throw ContractViolation("ε and the wavenumber must be finite");
    }
}

Spinor ReducedSystem::residual(double s, const Spinor& chi, const Spinor& dchi, std::size_t index) const {
    const PointJet jet{chi, dchi, (I * wavenumber_) * chi, s};
    return pointwise_residual(model_, jet, (-I * epsilon_) * chi, index);
}

Spinor ReducedSystem::derivative(double s, const Spinor& chi) const {
    const Spinor r0 = residual(s, chi, Spinor{});
    return {-r0.minus, r0.plus};
}

double ReducedSystem::term_scale(double s, const Spinor& chi, const Spinor& dchi) const {
    const LocalMatrix l = local_matrix(model_, chi, s);
    const double g = coordinates() == Coordinates::cylindrical ? 1.0 / s : 1.0;
    const double cyc = std::abs(wavenumber_) * g;
    return std::max({1.0, std::abs(epsilon_) * chi.max_abs(), dchi.max_abs(), cyc * chi.max_abs(),
                     std::abs(l.h11 * chi.plus), std::abs(l.h12 * chi.minus), std::abs(l.h21 * chi.plus),
                     std::abs(l.h22 * chi.minus)});
}

ReducedSystem reduce(const ModelSpec& model, double epsilon, double wavenumber) {
    return ReducedSystem(model, epsilon, wavenumber);
}

namespace {

void check_profile(const ReducedSystem& system, const ReducedProfile& profile) {
    const std::size_t n = profile.grid.size();
    if (profile.chi_plus.size() != n || profile.chi_minus.size() != n) {
        throw ContractViolation("profile components must match the profile grid");
    }
    const bool radial = profile.grid.kind() == AxisKind::radial;
    if (radial != (system.coordinates() == Coordinates::cylindrical)) {
        throw ContractViolation("profile grid and reduced model use different coordinates");
    }
}

bool excluded(const ResidualWindow& window, double s, double h) {
    return std::any_of(window.singular_points.begin(), window.singular_points.end(),
                       [&](double p) { return std::abs(s - p) < window.margin_spacings * h; });
}

}  // namespace

double reduced_residual(const ReducedSystem& system, const ReducedProfile& profile,
                        const ProfileDerivatives& derivatives, const ResidualWindow& window) {
    check_profile(system, profile);
    const std::size_t n = profile.grid.size();
    if (derivatives.d_plus.size() != n || derivatives.d_minus.size() != n) {
        throw ContractViolation("derivative samples must match the profile grid");
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double s = profile.grid.coordinate(i);
        if (excluded(window, s, profile.grid.spacing())) continue;
        const Spinor r = system.residual(s, profile.at(i), {derivatives.d_plus[i], derivatives.d_minus[i]}, i);
        worst = std::max(worst, r.max_abs());
    }
    return worst;
}

ProfileDerivatives finite_difference_derivatives(const ReducedProfile& profile, StencilOrder order) {
    const DerivativeOperator d(order, EdgeTreatment::one_sided);
    ProfileDerivatives out{std::vector<Complex>(profile.grid.size()), std::vector<Complex>(profile.grid.size())};
    d.apply_line(profile.grid, profile.chi_plus, out.d_plus);
    d.apply_line(profile.grid, profile.chi_minus, out.d_minus);
    return out;
}

double reduced_residual(const ReducedSystem& system, const ReducedProfile& profile,
                        const ResidualWindow& window) {
    return reduced_residual(system, profile, finite_difference_derivatives(profile), window);
}

bool is_half_odd(double kappa) noexcept {
    const double twice = 2.0 * kappa;
    const double nearest = std::round(twice);
    return std::abs(twice - nearest) < 1e-12 && std::fmod(std::abs(nearest), 2.0) == 1.0;
}

namespace {

void check_lift(const ReducedProfile& profile, const ModelSpec& model, Coordinates expected) {
    if (model.coordinates() != expected) {
        throw ContractViolation(std::string(to_string(model.equation())) + " is not " +
                                std::string(to_string(expected)));
    }
    const bool radial = profile.grid.kind() == AxisKind::radial;
    if (radial != (expected == Coordinates::cylindrical)) {
        throw ContractViolation("profile grid does not match the model's coordinates");
    }
}

template <Frame F>
SpinorField<F> lift_onto(const ReducedProfile& profile, const FieldGrid& grid, double t,
                         double cyclic_wavenumber) {
    const Complex time_phase = std::polar(1.0, -profile.epsilon * t);
    std::vector<Complex> p(grid.size());
    std::vector<Complex> m(grid.size());
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        for (std::size_t j = 0; j < grid.second_size(); ++j) {
            const Complex phase = time_phase * std::polar(1.0, profile.wavenumber * grid.second_coordinate(j));
            const std::size_t k = grid.index(i, j);
            p[k] = phase * profile.chi_plus[i];
            m[k] = phase * profile.chi_minus[i];
        }
    }
    return SpinorField<F>(grid, std::move(p), std::move(m), t, cyclic_wavenumber);
}

}  // namespace

SpinorState lift_to_plane(const ReducedProfile& profile, const ModelSpec& model, const Grid1D& y_axis,
                          double t) {
    check_lift(profile, model, Coordinates::cartesian);
    if (y_axis.boundary() == Boundary::periodic) {
        const double windings = profile.wavenumber * y_axis.length() / (2.0 * std::numbers::pi);
        if (std::abs(windings - std::round(windings)) > 1e-9) {
            throw ContractViolation("k·L_y must be a multiple of 2π on a periodic y axis");
        }
    } else if (y_axis.boundary() == Boundary::antiperiodic) {
        throw ContractViolation("Cartesian y axes are periodic or Dirichlet");
    }
    return lift_onto<Frame::psi>(profile, FieldGrid(profile.grid, y_axis), t, 0.0);
}

PhiState lift_to_disk(const ReducedProfile& profile, const ModelSpec& model, const Grid1D& theta_axis,
                      double t) {
    check_lift(profile, model, Coordinates::cylindrical);
    if (theta_axis.wraps()) {
        if (theta_axis.boundary() != Boundary::antiperiodic) {
            throw ContractViolation("φ on a closed disk is antiperiodic in θ; use an antiperiodic θ axis");
        }
        if (!is_half_odd(profile.wavenumber)) {
            throw ContractViolation("closed θ domains need a half-odd azimuthal number κ, got " +
                                    std::to_string(profile.wavenumber));
        }
    }
    return lift_onto<Frame::phi>(profile, FieldGrid(profile.grid, theta_axis), t, 0.0);
}

SpinorState lift_to_line(const ReducedProfile& profile, const ModelSpec& model, double t) {
    check_lift(profile, model, Coordinates::cartesian);
    return lift_onto<Frame::psi>(profile, FieldGrid(profile.grid), t, profile.wavenumber);
}

PhiState lift_to_ray(const ReducedProfile& profile, const ModelSpec& model, double t) {
    check_lift(profile, model, Coordinates::cylindrical);
    return lift_onto<Frame::phi>(profile, FieldGrid(profile.grid), t, profile.wavenumber);
}

double linear_dispersion_determinant(const ModelSpec& model, double epsilon, double q, double k) {
    if (model.coordinates() != Coordinates::cartesian || !model.is_linear()) {
        throw ContractViolation("plane-wave dispersion needs the linear limit of a Cartesian model");
    }
    const ReducedSystem sys(model, epsilon, k);
    // Columns of the linear map at the origin of the e^{iqx} phase.
    const Spinor e_plus{1.0, 0.0};
    const Spinor e_minus{0.0, 1.0};
    const Spinor c1 = sys.residual(0.0, e_plus, (I * q) * e_plus);
    const Spinor c2 = sys.residual(0.0, e_minus, (I * q) * e_minus);
    const Complex det = c1.plus * c2.minus - c2.plus * c1.minus;
    return det.real();
}

std::vector<double> linear_dispersion_energies(const ModelSpec& model, double q, double k) {
    const double reach = std::abs(model.mass()) + std::abs(q) + std::abs(k) + 1.0;
    auto f = [&](double e) { return linear_dispersion_determinant(model, e, q, k); };

    std::vector<double> roots;
    constexpr int cells = 257;
    double a = -reach;
    double fa = f(a);
    for (int c = 1; c <= cells; ++c) {
        const double b = -reach + 2.0 * reach * c / cells;
        const double fb = f(b);
        if (fa == 0.0) {
            roots.push_back(a);
        } else if (fa * fb < 0.0) {
            boost::uintmax_t iters = 200;
            const auto tol = boost::math::tools::eps_tolerance<double>(52);
            const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

}  // namespace nldirac
