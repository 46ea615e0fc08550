#include "test_support.hpp"

#include <nldirac/error.hpp>
#include <nldirac/models.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace nldirac;
using nldirac::testing::random_complex;
using nldirac::testing::random_spinor;
using nldirac::testing::uniform;

namespace {

double ssqrt(double u) { return u < 0 ? -std::sqrt(-u) : std::sqrt(u); }

// H(ψ)ψ written out entry by entry for each model, independently of the
// library's coupling tables.
Spinor oracle_h_psi(const ModelSpec& spec, const PointJet& j) {
    const auto p = [&](std::string_view n) { return spec.parameter_or_zero(n); };
    const Complex a = j.value.plus, b = j.value.minus;
    const double m = spec.mass();
    const bool cyl = spec.coordinates() == Coordinates::cylindrical;
    const double g = cyl ? 1.0 / j.radius : 1.0;
    const double w = cyl ? 1.0 / std::sqrt(j.radius) : 1.0;  // 1/√r on every nonlinear term
    const Complex d_up = j.d_first.minus - I * g * j.d_second.minus;     // (∂₁ − i g ∂₂) ψ₋
    const Complex d_down = -j.d_first.plus - I * g * j.d_second.plus;   // (−∂₁ − i g ∂₂) ψ₊
    const double aa = std::norm(a), bb = std::norm(b);
    Complex h11 = m, h22 = -m, n12 = 0.0, n21 = 0.0;
    switch (spec.equation()) {
        case EquationId::eq5: {
            const double s = ssqrt(aa - bb), v = ssqrt(aa + bb);
            const double u = ssqrt((I * (std::conj(a) * b - a * std::conj(b))).real());
            const double ww = ssqrt((std::conj(a) * b + a * std::conj(b)).real());
            h11 += p("alpha_s") * s + p("alpha_v") * v;
            h22 += -p("alpha_s") * s + p("alpha_v") * v;
            n12 = I * p("alpha_u") * u + p("alpha_w") * ww;
            n21 = -I * p("alpha_u") * u + p("alpha_w") * ww;
            break;
        }
        case EquationId::eq7:
        case EquationId::eq10: {
            const double s = ssqrt(aa - bb), v = ssqrt(aa + bb);
            const double ww = ssqrt((std::conj(a) * b + a * std::conj(b)).real());
            h11 += w * (p("alpha_s") * s + p("alpha_v") * v);
            h22 += w * (-p("alpha_s") * s + p("alpha_v") * v);
            n12 = n21 = w * p("alpha_w") * ww;
            break;
        }
        case EquationId::eq9: {
            h11 += p("alpha_plus") * aa + p("alpha_minus") * bb;
            h22 += p("alpha_plus") * bb + p("alpha_minus") * aa;
            n12 = n21 = p("alpha_w") * (std::conj(a) * b + a * std::conj(b));
            break;
        }
        default: {
            h11 += w * (p("alpha_plus") * std::abs(a) + p("alpha_minus") * std::abs(b));
            h22 += w * (p("alpha_plus") * std::abs(b) + p("alpha_minus") * std::abs(a));
            const Complex direct = p("beta_plus") * a + p("beta_minus") * b;
            const Complex conj = p("beta_plus") * std::conj(a) + p("beta_minus") * std::conj(b);
            const Complex moduli = p("beta_plus") * std::abs(a) + p("beta_minus") * std::abs(b);
            switch (spec.equation()) {
                case EquationId::eq8a: n12 = direct; n21 = direct; break;
                case EquationId::eq8b: n12 = conj; n21 = direct; break;
                case EquationId::eq11a: n12 = w * direct; n21 = w * conj; break;
                case EquationId::eq11b: n12 = w * conj; n21 = w * direct; break;
                default: n12 = n21 = w * moduli; break;
            }
        }
    }
    return {h11 * a + d_up + n12 * b, d_down + n21 * a + h22 * b};
}

ModelSpec random_model(EquationId id) {
    ModelSpec spec(id, uniform(-1.0, 2.0));
    for (auto name : spec.parameter_names()) spec.set(name, uniform(-1.5, 1.5));
    return spec;
}

PointJet random_jet() { return {random_spinor(), random_spinor(), random_spinor(), uniform(0.2, 3.0)}; }

}  // namespace

TEST(Models, NamesRoundTrip) {
    for (EquationId id : all_equations) EXPECT_EQ(parse_equation_id(to_string(id)), id);
    EXPECT_FALSE(parse_equation_id("eq6").has_value());
}

TEST(Models, ParameterNamesPerEquation) {
    EXPECT_EQ(ModelSpec(EquationId::eq5).parameter_names().size(), 4u);
    EXPECT_TRUE(ModelSpec(EquationId::eq7).has_parameter("alpha_w"));
    EXPECT_FALSE(ModelSpec(EquationId::eq7).has_parameter("alpha_u"));
    EXPECT_TRUE(ModelSpec(EquationId::eq9).has_parameter("alpha_plus"));
    EXPECT_TRUE(ModelSpec(EquationId::eq13).has_parameter("beta_minus"));
    EXPECT_THROW(ModelSpec(EquationId::eq12).set("alpha_w", 1.0), ContractViolation);
    EXPECT_THROW(ModelSpec(EquationId::eq7).set("alpha_s", INFINITY), ContractViolation);
    EXPECT_EQ(ModelSpec(EquationId::eq9).coupling_units(), CouplingUnits::length);
    EXPECT_EQ(ModelSpec(EquationId::eq10).frame(), Frame::phi);
}

TEST(Models, HamiltonianMatchesWrittenOutEquations) {
    for (EquationId id : all_equations) {
        for (int trial = 0; trial < 40; ++trial) {
            const ModelSpec spec = random_model(id);
            const PointJet jet = random_jet();
            const Spinor got = apply_hamiltonian(spec, jet);
            const Spinor want = oracle_h_psi(spec, jet);
            EXPECT_NEAR(std::abs(got.plus - want.plus), 0.0, 1e-12) << to_string(id);
            EXPECT_NEAR(std::abs(got.minus - want.minus), 0.0, 1e-12) << to_string(id);
        }
    }
}

TEST(Models, HermiticityTableAgreesWithNumericalCheck) {
    for (EquationId id : all_equations) {
        bool hermitian = true;
        for (int trial = 0; trial < 20; ++trial) {
            const ModelSpec spec = random_model(id);
            const LocalMatrix h = local_matrix(spec, random_spinor(), uniform(0.2, 3.0));
            if (std::abs(h.h11.imag()) > 1e-14 || std::abs(h.h22.imag()) > 1e-14 ||
                std::abs(h.h21 - std::conj(h.h12)) > 1e-12) {
                hermitian = false;
            }
        }
        const ModelSpec spec(id);
        EXPECT_EQ(hermiticity(spec).is_hermitian, hermitian) << to_string(id);
        EXPECT_EQ(is_hermitian(id), hermitian) << to_string(id);
    }
}

TEST(Models, SeparableModelsAreGlobalPhaseInvariant) {
    // H(e^{iφ}ψ) = H(ψ) is what lets e^{-iεt} factor out of the equation.
    for (EquationId id : all_equations) {
        bool invariant = true;
        for (int trial = 0; trial < 20; ++trial) {
            const ModelSpec spec = random_model(id);
            const Spinor psi = random_spinor();
            const Complex phase = std::polar(1.0, uniform(0.3, 2.5));
            const LocalMatrix a = local_matrix(spec, psi, 1.3);
            const LocalMatrix b = local_matrix(spec, phase * psi, 1.3);
            if (std::abs(a.h12 - b.h12) + std::abs(a.h21 - b.h21) + std::abs(a.h11 - b.h11) > 1e-12) invariant = false;
        }
        if (is_time_separable(id)) EXPECT_TRUE(invariant) << to_string(id);
        const bool lorentz_violating = id == EquationId::eq8a || id == EquationId::eq8b ||
                                       id == EquationId::eq11a || id == EquationId::eq11b;
        EXPECT_EQ(invariant, !lorentz_violating) << to_string(id);
    }
    EXPECT_TRUE(is_time_separable(EquationId::eq7));
    EXPECT_TRUE(is_time_separable(EquationId::eq13));
    EXPECT_FALSE(is_time_separable(EquationId::eq8a));
}

TEST(Models, FreePlaneWaveSolvesLinearLimit) {
    // ψ = v e^{i(qx + ky − εt)}, ε = √(m² + q² + k²), v = (ε + m, k − iq).
    for (EquationId id : {EquationId::eq5, EquationId::eq7, EquationId::eq8a, EquationId::eq9, EquationId::eq12}) {
        for (int trial = 0; trial < 10; ++trial) {
            const double m = uniform(0.0, 2.0), q = uniform(-2.0, 2.0), k = uniform(-2.0, 2.0);
            const double e = std::sqrt(m * m + q * q + k * k);
            const Spinor v{e + m, Complex(k, -q)};
            const PointJet jet{v, I * q * v, I * k * v, 1.0};
            const Spinor r = pointwise_residual(ModelSpec(id, m), jet, -I * e * v);
            EXPECT_NEAR(r.max_abs(), 0.0, 1e-13);
        }
    }
}

TEST(Models, ZeroStateHasZeroResidual) {
    for (EquationId id : all_equations) {
        const Spinor r = pointwise_residual(random_model(id), PointJet{{}, {}, {}, 1.0}, {});
        EXPECT_EQ(r.max_abs(), 0.0);
    }
}

TEST(Models, CompatibilityIsChecked) {
    const FieldGrid cart(Grid1D::cartesian(8, 0.0, 1.0));
    const FieldGrid cyl(Grid1D::radial(8, 0.5, 1.0));
    EXPECT_NO_THROW(check_compatible(ModelSpec(EquationId::eq7), cart, Frame::psi));
    EXPECT_THROW(check_compatible(ModelSpec(EquationId::eq7), cyl, Frame::psi), ContractViolation);
    EXPECT_THROW(check_compatible(ModelSpec(EquationId::eq10), cart, Frame::phi), ContractViolation);
    EXPECT_THROW(check_compatible(ModelSpec(EquationId::eq10), cyl, Frame::psi), ContractViolation);
}

TEST(Models, GridRhsMatchesPointwiseHamiltonian) {
    // On a slice the ∂₂ derivative is exact, so only ∂₁ needs a stencil; a
    // linear profile is differentiated exactly by any central stencil away
    // from the edges.
    const FieldGrid grid(Grid1D::radial(16, 0.5, 2.0));
    const Complex c0 = random_complex(), c1 = random_complex(), d0 = random_complex(), d1 = random_complex();
    const PhiState s = PhiState::sample(grid, [&](double r, double) { return Spinor{c0 + c1 * r, d0 + d1 * r}; },
                                        0.0, 0.5);
    const ModelSpec spec = random_model(EquationId::eq13);
    const DerivativeOperator deriv;
    const PhiState dt = rhs(spec, s, deriv);
    for (std::size_t i = 2; i + 2 < 16; ++i) {
        const Spinor v = s.at(i);
        const PointJet jet{v, {c1, d1}, I * 0.5 * v, grid.first().coordinate(i)};
        const Spinor want = -I * apply_hamiltonian(spec, jet);
        EXPECT_NEAR((dt.at(i) - want).max_abs(), 0.0, 1e-12);
    }
    const ResidualField r = residual(spec, s, dt, deriv);
    EXPECT_LT(r.linf(), 1e-12);
}
