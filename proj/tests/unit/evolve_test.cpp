#include "test_support.hpp"

#include <nldirac/error.hpp>
#include <nldirac/evolve.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace nldirac;

namespace {

const DerivativeOperator deriv4(StencilOrder::fourth);

// Only the vector coupling: its radicand ψ†ψ stays positive, so the flow is
// smooth and the stepper shows its full order.
ModelSpec nonlinear_eq7() {
    ModelSpec spec(EquationId::eq7, 1.0);
    spec.set("alpha_v", 0.6);
    return spec;
}

FieldGrid periodic_line(std::size_t n) {
    return FieldGrid(Grid1D::cartesian(n, -std::numbers::pi, std::numbers::pi, Boundary::periodic));
}

SpinorState bump(const FieldGrid& grid) {
    return SpinorState::sample(grid, [](double x, double y) {
        const double g = std::exp(-(x * x + y * y));
        return Spinor{Complex(0.8, 0.1) * g, Complex(-0.2, 0.5) * g * std::polar(1.0, x)};
    });
}

Integrator rk4(double dt) {
    Integrator integ;
    integ.dt = dt;
    return integ;
}

double max_difference(const SpinorState& a, const SpinorState& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (a.at(k) - b.at(k)).max_abs());
    return worst;
}

}  // namespace

TEST(Evolve, ZeroStateStaysZero) {
    const FieldGrid grid(Grid1D::cartesian(16, -2, 2, Boundary::periodic), Grid1D::cartesian(16, -2, 2, Boundary::periodic));
    for (EquationId id : {EquationId::eq5, EquationId::eq8a, EquationId::eq9, EquationId::eq12}) {
        const auto traj = evolve(ModelSpec(id, 0.0), SpinorState::zeros(grid), 0.2, rk4(0.01), deriv4);
        EXPECT_EQ(traj.samples.back().max_abs(), 0.0) << to_string(id);
    }
}

TEST(Evolve, FreePlaneWaveKeepsAmplitudeOverOnePeriod) {
    const double m = 1.0, q = 1.0;
    const FieldGrid grid = periodic_line(32);
    const double h = grid.first().spacing();
    // The fourth-order stencil sees e^{iqx} with this wavenumber.
    const double qh = (8.0 * std::sin(q * h) - std::sin(2.0 * q * h)) / (6.0 * h);
    const double eps = std::sqrt(m * m + qh * qh);
    const Complex partner = Complex(0.0, -qh) / (eps + m);
    const SpinorState psi0 = SpinorState::sample(grid, [&](double x, double) {
        return Spinor{std::polar(1.0, q * x), partner * std::polar(1.0, q * x)};
    });
    const double period = 2.0 * std::numbers::pi / eps;
    const auto traj = evolve(ModelSpec(EquationId::eq7, m), psi0, period, rk4(period / 600), deriv4);
    const SpinorState& end = traj.samples.back();
    EXPECT_DOUBLE_EQ(end.time(), period);
    double amp = 0.0;
    for (std::size_t k = 0; k < end.size(); ++k) {
        amp = std::max({amp, std::abs(std::abs(end.plus()[k]) - 1.0), std::abs(std::abs(end.minus()[k]) - std::abs(partner))});
    }
    EXPECT_LE(amp, 1e-8);
    // After a full period the exact discrete solution is back where it started.
    EXPECT_LE(max_difference(end, psi0), 1e-7);
}

TEST(Evolve, TimeReversalRecoversInitialState) {
    const ModelSpec spec = nonlinear_eq7();
    const SpinorState psi0 = bump(periodic_line(64));
    SpinorState s = psi0;
    const double dt = 0.005;
    for (int i = 0; i < 100; ++i) s = step(spec, s, dt, deriv4);
    for (int i = 0; i < 100; ++i) s = step(spec, s, -dt, deriv4);
    EXPECT_NEAR(s.time(), 0.0, 1e-14);
    EXPECT_LT(max_difference(s, psi0), 1e-9);
}

TEST(Evolve, Rk4ConvergesAtFourthOrder) {
    const ModelSpec spec = nonlinear_eq7();
    const SpinorState psi0 = bump(periodic_line(64));
    const double t = 0.5;
    const auto run = [&](double dt) { return evolve(spec, psi0, t, rk4(dt), deriv4).samples.back(); };
    const SpinorState a = run(0.02), b = run(0.01), c = run(0.005);
    const double order = std::log2(max_difference(a, b) / max_difference(b, c));
    EXPECT_GE(order, 3.5);
}

TEST(Evolve, AdaptiveAgreesWithFineRk4) {
    const ModelSpec spec = nonlinear_eq7();
    const SpinorState psi0 = bump(periodic_line(64));
    Integrator adaptive;
    adaptive.scheme = Scheme::rk45_adaptive;
    adaptive.abs_tol = 1e-11;
    adaptive.rel_tol = 1e-11;
    const SpinorState a = evolve(spec, psi0, 0.5, adaptive, deriv4).samples.back();
    const SpinorState b = evolve(spec, psi0, 0.5, rk4(0.0025), deriv4).samples.back();
    EXPECT_DOUBLE_EQ(a.time(), 0.5);
    EXPECT_LT(max_difference(a, b), 1e-8);
}

TEST(Evolve, HermitianModelConservesNorm) {
    const ModelSpec spec = nonlinear_eq7();
    const SpinorState psi0 = bump(periodic_line(64));
    const auto traj = evolve(spec, psi0, 1.0, rk4(0.01), deriv4, 10);
    const double n0 = traj.diagnostics.front().norm;
    for (const DiagnosticsRecord& d : traj.diagnostics) EXPECT_NEAR(d.norm, n0, 1e-8 * n0);
}

TEST(Evolve, SamplingKeepsEveryNthStepAndTheEnd) {
    const SpinorState psi0 = bump(periodic_line(32));
    const auto traj = evolve(nonlinear_eq7(), psi0, 0.25, rk4(0.01), deriv4, 10);
    ASSERT_EQ(traj.samples.size(), traj.diagnostics.size());
    // steps 0, 10, 20 and the final 25
    ASSERT_EQ(traj.samples.size(), 4u);
    EXPECT_EQ(traj.diagnostics.back().step_count, 25u);
    EXPECT_DOUBLE_EQ(traj.samples.back().time(), 0.25);
    EXPECT_EQ(traj.diagnostics.front().dt_current, 0.0);
    std::size_t seen = 0;
    evolve(nonlinear_eq7(), psi0, 0.25, rk4(0.01), deriv4, 10,
           EvolveObserver<Frame::psi>([&](const SpinorState&, const DiagnosticsRecord&) { ++seen; }));
    EXPECT_EQ(seen, 4u);
}

TEST(Evolve, FinalTimeEqualToStartGivesOneSample) {
    const SpinorState psi0 = bump(periodic_line(32)).with_time(1.5);
    const auto traj = evolve(nonlinear_eq7(), psi0, 1.5, rk4(0.01), deriv4);
    ASSERT_EQ(traj.samples.size(), 1u);
    EXPECT_EQ(max_difference(traj.samples[0], psi0), 0.0);
}

TEST(Evolve, RejectsStepAboveCflCeiling) {
    const FieldGrid grid = periodic_line(32);
    Integrator integ = rk4(0.0);
    const double ceiling = integ.cfl_limit(grid);
    EXPECT_NEAR(ceiling, 0.5 * grid.first().spacing(), 1e-15);
    integ.dt = 2.0 * ceiling;
    EXPECT_THROW(evolve(nonlinear_eq7(), bump(grid), 1.0, integ, deriv4), ContractViolation);
}

TEST(Evolve, DetectsNonFiniteValues) {
    const FieldGrid grid = periodic_line(32);
    std::vector<Complex> p(grid.size()), m(grid.size());
    p[5] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(SpinorState(grid, p, m), ContractViolation);
    // A cubic model overflows from huge data; no blow-up threshold is set.
    ModelSpec eq9(EquationId::eq9, 0.0);
    eq9.set("alpha_plus", 1.0);
    p[5] = 1e120;
    Integrator integ = rk4(0.01);
    integ.blowup_threshold = std::numeric_limits<double>::infinity();
    EXPECT_THROW(evolve(eq9, SpinorState(grid, p, m), 0.1, integ, deriv4), NumericalFailure);
}

TEST(Evolve, DetectsBlowUp) {
    Integrator integ = rk4(0.01);
    integ.blowup_threshold = 0.5;
    try {
        evolve(nonlinear_eq7(), bump(periodic_line(32)), 0.1, integ, deriv4);
        FAIL() << "expected NumericalFailure";
    } catch (const NumericalFailure& e) {
        EXPECT_LE(e.step(), 1u);
    }
}

TEST(Evolve, MasslessCubicFlowIsScaleCovariant) {
    // With m = 0 the moduli model maps λψ(λt, λx) solutions onto solutions;
    // on a grid shrunk by λ with dt/λ the discrete flow does too.
    ModelSpec spec(EquationId::eq12, 0.0);
    spec.set("alpha_plus", 0.7).set("alpha_minus", 0.4).set("beta_plus", 0.3).set("beta_minus", -0.5);
    const double lambda = 2.0;
    const FieldGrid g1(Grid1D::cartesian(32, -4, 4, Boundary::periodic), Grid1D::cartesian(32, -4, 4, Boundary::periodic));
    const FieldGrid g2(Grid1D::cartesian(32, -4 / lambda, 4 / lambda, Boundary::periodic),
                       Grid1D::cartesian(32, -4 / lambda, 4 / lambda, Boundary::periodic));
    const SpinorState a0 = bump(g1);
    const SpinorState b0 = SpinorState::sample(g2, [&](double x, double y) {
        const double g = std::exp(-lambda * lambda * (x * x + y * y));
        return Spinor{lambda * Complex(0.8, 0.1) * g, lambda * Complex(-0.2, 0.5) * g * std::polar(1.0, lambda * x)};
    });
    const SpinorState a = evolve(spec, a0, 0.4, rk4(0.02), deriv4).samples.back();
    const SpinorState b = evolve(spec, b0, 0.4 / lambda, rk4(0.02 / lambda), deriv4).samples.back();
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, (lambda * a.at(k) - b.at(k)).max_abs());
    EXPECT_LT(worst, 1e-12);
}

TEST(Scheme, ParseNames) {
    EXPECT_EQ(parse_scheme("rk4"), Scheme::rk4_fixed);
    EXPECT_EQ(parse_scheme("rk45-adaptive"), Scheme::rk45_adaptive);
    EXPECT_FALSE(parse_scheme("euler").has_value());
    EXPECT_EQ(to_string(Scheme::rk4_fixed), "rk4-fixed");
}
