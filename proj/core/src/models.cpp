#include "nldirac/models.hpp"

#include "nldirac/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nldirac {

namespace {

using namespace std::string_view_literals;

constexpr std::array<std::string_view, 4> names_eq5{"alpha_s"sv, "alpha_v"sv, "alpha_u"sv, "alpha_w"sv};
constexpr std::array<std::string_view, 3> names_eq7{"alpha_s"sv, "alpha_v"sv, "alpha_w"sv};
constexpr std::array<std::string_view, 4> names_four{"alpha_plus"sv, "alpha_minus"sv, "beta_plus"sv,
                                                     "beta_minus"sv};
constexpr std::array<std::string_view, 3> names_eq9{"alpha_plus"sv, "alpha_minus"sv, "alpha_w"sv};

struct Entry {
    EquationId id;
    std::string_view name;
    Coordinates coords;
    std::span<const std::string_view> params;
    bool hermitian;
    bool separable;
};

// Hermiticity read off the printed matrices: the diagonal is always real;
// off-diagonals must be complex conjugates of each other.
constexpr std::array<Entry, 10> registry{{
    {EquationId::eq5, "eq5", Coordinates::cartesian, names_eq5, true, false},
    {EquationId::eq7, "eq7", Coordinates::cartesian, names_eq7, true, true},
    {EquationId::eq8a, "eq8a", Coordinates::cartesian, names_four, false, false},
    {EquationId::eq8b, "eq8b", Coordinates::cartesian, names_four, true, false},
    {EquationId::eq9, "eq9", Coordinates::cartesian, names_eq9, true, false},
    {EquationId::eq10, "eq10", Coordinates::cylindrical, names_eq7, true, true},
    {EquationId::eq11a, "eq11a", Coordinates::cylindrical, names_four, true, false},
    {EquationId::eq11b, "eq11b", Coordinates::cylindrical, names_four, true, false},
    {EquationId::eq12, "eq12", Coordinates::cartesian, names_four, true, true},
    {EquationId::eq13, "eq13", Coordinates::cylindrical, names_four, true, true},
}};

const Entry& entry(EquationId id) { return registry[static_cast<std::size_t>(id)]; }

}  // namespace

std::string_view to_string(EquationId id) { return entry(id).name; }

std::optional<EquationId> parse_equation_id(std::string_view name) {
    for (const auto& e : registry) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

ModelSpec::ModelSpec(EquationId id, double mass, RadicandPolicy policy)
    : id_(id), mass_(mass), policy_(policy) {
    if (!std::isfinite(mass)) throw ContractViolation("mass must be finite");
}

Coordinates ModelSpec::coordinates() const noexcept { return entry(id_).coords; }

Frame ModelSpec::frame() const noexcept {
    return coordinates() == Coordinates::cylindrical ? Frame::phi : Frame::psi;
}

CouplingUnits ModelSpec::coupling_units() const noexcept {
    return id_ == EquationId::eq9 ? CouplingUnits::length : CouplingUnits::dimensionless;
}

std::span<const std::string_view> ModelSpec::parameter_names() const noexcept {
    return entry(id_).params;
}

bool ModelSpec::has_parameter(std::string_view name) const noexcept {
    const auto names = parameter_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

double ModelSpec::parameter(std::string_view name) const {
    const auto names = parameter_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw ContractViolation(std::string(to_string(id_)) + " has no coupling named '" +
                                std::string(name) + "'");
    }
    return params_[static_cast<std::size_t>(it - names.begin())];
}

double ModelSpec::parameter_or_zero(std::string_view name) const noexcept {
    const auto names = parameter_names();
    const auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? 0.0 : params_[static_cast<std::size_t>(it - names.begin())];
}

ModelSpec& ModelSpec::set(std::string_view name, double value) {
    const auto names = parameter_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw ContractViolation(std::string(to_string(id_)) + " has no coupling named '" +
                                std::string(name) + "'");
    }
    if (!std::isfinite(value)) throw ContractViolation("couplings must be finite reals");
    params_[static_cast<std::size_t>(it - names.begin())] = value;
    return *this;
}

ModelSpec& ModelSpec::set_mass(double m) {
    if (!std::isfinite(m)) throw ContractViolation("mass must be finite");
    mass_ = m;
    return *this;
}

ModelSpec ModelSpec::linear_limit() const { return ModelSpec(id_, mass_, policy_); }

bool ModelSpec::is_linear() const noexcept {
    return std::all_of(params_.begin(), params_.end(), [](double v) { return v == 0.0; });
}

LocalMatrix nonlinear_matrix(const ModelSpec& spec, const Spinor& value, double radius,
                             std::size_t index) {
    const Complex p = value.plus;
    const Complex q = value.minus;
    const double ap = std::abs(p);
    const double aq = std::abs(q);
    auto par = [&](std::string_view n) { return spec.parameter_or_zero(n); };

    // Cylindrical couplings come with a 1/√r factor.
    const double scale = spec.coordinates() == Coordinates::cylindrical ? 1.0 / std::sqrt(radius) : 1.0;

    switch (spec.equation()) {
        case EquationId::eq5:
        case EquationId::eq7:
        case EquationId::eq10: {
            const CouplingValues c = couplings_at(value, spec.policy(), index);
            const double a_s = par("alpha_s");
            const double a_v = par("alpha_v");
            const double a_u = par("alpha_u");
            const double a_w = par("alpha_w");
            const double d_s = scale * a_s * c.s_tilde;
            const double d_v = scale * a_v * c.v_tilde;
            const Complex u = I * (scale * a_u * c.u_tilde);
            const double w = scale * a_w * c.w_tilde;
            return {d_s + d_v, u + w, -u + w, -d_s + d_v};
        }
        case EquationId::eq8a:
        case EquationId::eq8b:
        case EquationId::eq11a:
        case EquationId::eq11b:
        case EquationId::eq12:
        case EquationId::eq13: {
            const double a_p = par("alpha_plus");
            const double a_m = par("alpha_minus");
            const double b_p = par("beta_plus");
            const double b_m = par("beta_minus");
            const double d1 = scale * (a_p * ap + a_m * aq);
            const double d2 = scale * (a_p * aq + a_m * ap);
            const Complex direct = scale * (b_p * p + b_m * q);
            const Complex conjugate = scale * (b_p * std::conj(p) + b_m * std::conj(q));
            const double moduli = scale * (b_p * ap + b_m * aq);
            switch (spec.equation()) {
                case EquationId::eq8a: return {d1, direct, direct, d2};
                case EquationId::eq8b: return {d1, conjugate, direct, d2};
                case EquationId::eq11a: return {d1, direct, conjugate, d2};
                case EquationId::eq11b: return {d1, conjugate, direct, d2};
                default: return {d1, moduli, moduli, d2};
            }
        }
        case EquationId::eq9: {
            const double a_p = par("alpha_plus");
            const double a_m = par("alpha_minus");
            const double a_w = par("alpha_w");
            const double w = a_w * radicands(value).vector2;
            return {a_p * ap * ap + a_m * aq * aq, w, w, a_p * aq * aq + a_m * ap * ap};
        }
    }
    return {};
}

LocalMatrix local_matrix(const ModelSpec& spec, const Spinor& value, double radius, std::size_t index) {
    LocalMatrix l = nonlinear_matrix(spec, value, radius, index);
    l.h11 += spec.mass();
    l.h22 -= spec.mass();
    return l;
}

Spinor apply_hamiltonian(const ModelSpec& spec, const PointJet& jet, std::size_t index) {
    const double g = spec.coordinates() == Coordinates::cylindrical ? 1.0 / jet.radius : 1.0;
    // Free Dirac operator: upper-right ∂₁ − i g ∂₂, lower-left −∂₁ − i g ∂₂.
    const Complex kin_plus = jet.d_first.minus - I * g * jet.d_second.minus;
    const Complex kin_minus = -jet.d_first.plus - I * g * jet.d_second.plus;
    Spinor out = local_matrix(spec, jet.value, jet.radius, index) * jet.value;
    out.plus += kin_plus;
    out.minus += kin_minus;
    return out;
}

Spinor pointwise_residual(const ModelSpec& spec, const PointJet& jet, const Spinor& time_derivative,
                          std::size_t index) {
    return I * time_derivative - apply_hamiltonian(spec, jet, index);
}

HermiticityClass hermiticity(const ModelSpec& spec) {
    return {spec.equation(), is_hermitian(spec.equation())};
}

bool is_hermitian(EquationId id) noexcept { return entry(id).hermitian; }

bool is_time_separable(EquationId id) noexcept { return entry(id).separable; }

void check_compatible(const ModelSpec& spec, const FieldGrid& grid, Frame frame) {
    if (grid.coordinates() != spec.coordinates()) {
        throw ContractViolation(std::string(to_string(spec.equation())) + " is " +
                                std::string(to_string(spec.coordinates())) + " but the grid is " +
                                std::string(to_string(grid.coordinates())));
    }
    if (frame != spec.frame()) {
        throw ContractViolation(std::string(to_string(spec.equation())) +
                                (spec.frame() == Frame::phi ? " acts on φ-frame fields"
                                                            : " acts on ψ-frame fields"));
    }
}

void apply_hamiltonian(const ModelSpec& spec, const FieldGrid& grid, double cyclic_wavenumber,
                       std::span<const Complex> plus, std::span<const Complex> minus,
                       const DerivativeOperator& deriv, std::span<Complex> out_plus,
                       std::span<Complex> out_minus) {
    const auto dp1 = deriv.along_first(grid, plus);
    const auto dm1 = deriv.along_first(grid, minus);
    const auto dp2 = deriv.along_second(grid, plus, cyclic_wavenumber);
    const auto dm2 = deriv.along_second(grid, minus, cyclic_wavenumber);
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        const double r = grid.first().coordinate(i);
        for (std::size_t j = 0; j < grid.second_size(); ++j) {
            const std::size_t k = grid.index(i, j);
            const PointJet jet{{plus[k], minus[k]}, {dp1[k], dm1[k]}, {dp2[k], dm2[k]}, r};
            const Spinor h = apply_hamiltonian(spec, jet, k);
            out_plus[k] = h.plus;
            out_minus[k] = h.minus;
        }
    }
}

template <Frame F>
SpinorField<F> rhs(const ModelSpec& spec, const SpinorField<F>& state, const DerivativeOperator& deriv) {
    check_compatible(spec, state.grid(), F);
    std::vector<Complex> p(state.size());
    std::vector<Complex> m(state.size());
    apply_hamiltonian(spec, state.grid(), state.cyclic_wavenumber(), state.plus(), state.minus(), deriv,
                      p, m);
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] *= -I;
        m[k] *= -I;
    }
    return SpinorField<F>(state.grid(), std::move(p), std::move(m), state.time(),
                          state.cyclic_wavenumber());
}

double ResidualField::linf() const noexcept {
    double m = 0.0;
    for (std::size_t k = 0; k < plus.size(); ++k) m = std::max({m, std::abs(plus[k]), std::abs(minus[k])});
    return m;
}

template <Frame F>
ResidualField residual(const ModelSpec& spec, const SpinorField<F>& state,
                       const SpinorField<F>& time_derivative, const DerivativeOperator& deriv) {
    check_compatible(spec, state.grid(), F);
    if (!(time_derivative.grid() == state.grid())) {
        throw ContractViolation("time derivative must live on the state's grid");
    }
    ResidualField r{std::vector<Complex>(state.size()), std::vector<Complex>(state.size())};
    apply_hamiltonian(spec, state.grid(), state.cyclic_wavenumber(), state.plus(), state.minus(), deriv,
                      r.plus, r.minus);
    const auto tp = time_derivative.plus();
    const auto tm = time_derivative.minus();
    for (std::size_t k = 0; k < r.plus.size(); ++k) {
        r.plus[k] = I * tp[k] - r.plus[k];
        r.minus[k] = I * tm[k] - r.minus[k];
    }
    return r;
}

template SpinorField<Frame::psi> rhs(const ModelSpec&, const SpinorField<Frame::psi>&,
                                     const DerivativeOperator&);
template SpinorField<Frame::phi> rhs(const ModelSpec&, const SpinorField<Frame::phi>&,
                                     const DerivativeOperator&);
template ResidualField residual(const ModelSpec&, const SpinorField<Frame::psi>&,
                                const SpinorField<Frame::psi>&, const DerivativeOperator&);
template ResidualField residual(const ModelSpec&, const SpinorField<Frame::phi>&,
                                const SpinorField<Frame::phi>&, const DerivativeOperator&);

}  // namespace nldirac
