#include "test_support.hpp"

#include <nldirac/couplings.hpp>
#include <nldirac/error.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace nldirac;
using nldirac::testing::random_spinor;

TEST(Radicands, HandComputedValues) {
    // ψ₊ = 1 + i, ψ₋ = 2: ψ₊*ψ₋ = 2 − 2i.
    const Radicands r = radicands({{1.0, 1.0}, {2.0, 0.0}});
    EXPECT_DOUBLE_EQ(r.scalar, 2.0 - 4.0);
    EXPECT_DOUBLE_EQ(r.vector0, 6.0);
    EXPECT_DOUBLE_EQ(r.vector1, 4.0);  // −2·Im(2 − 2i)
    EXPECT_DOUBLE_EQ(r.vector2, 4.0);  // 2·Re(2 − 2i)
}

TEST(Radicands, FierzIdentityHoldsForRandomSpinors) {
    // (|a|²+|b|²)² = (|a|²−|b|²)² + 4|a*b|² = S² + U² + W².
    for (int trial = 0; trial < 200; ++trial) {
        const Spinor psi = random_spinor(3.0);
        const Radicands r = radicands(psi);
        const double lhs = r.vector0 * r.vector0;
        const double rhs = r.scalar * r.scalar + r.vector1 * r.vector1 + r.vector2 * r.vector2;
        EXPECT_NEAR(lhs, rhs, 1e-12 * lhs);
        EXPECT_GE(r.vector0, std::abs(r.scalar));
    }
}

TEST(Radicands, PhaseInvariant) {
    for (int trial = 0; trial < 50; ++trial) {
        const Spinor psi = random_spinor();
        const Complex phase = std::polar(1.0, nldirac::testing::uniform(0.0, 2.0 * std::numbers::pi));
        const Radicands a = radicands(psi);
        const Radicands b = radicands(phase * psi);
        EXPECT_NEAR(a.scalar, b.scalar, 1e-14);
        EXPECT_NEAR(a.vector1, b.vector1, 1e-14);
        EXPECT_NEAR(a.vector2, b.vector2, 1e-14);
    }
}

TEST(PolicyRoot, SignedSqrt) {
    EXPECT_DOUBLE_EQ(policy_root(4.0, RadicandPolicy::signed_sqrt), 2.0);
    EXPECT_DOUBLE_EQ(policy_root(-9.0, RadicandPolicy::signed_sqrt), -3.0);
    EXPECT_DOUBLE_EQ(policy_root(0.0, RadicandPolicy::signed_sqrt), 0.0);
}

TEST(PolicyRoot, ClampAndError) {
    EXPECT_DOUBLE_EQ(policy_root(-9.0, RadicandPolicy::clamp_to_zero), 0.0);
    EXPECT_DOUBLE_EQ(policy_root(9.0, RadicandPolicy::clamp_to_zero), 3.0);
    EXPECT_DOUBLE_EQ(policy_root(9.0, RadicandPolicy::error_on_negative), 3.0);
    try {
        policy_root(-1.0, RadicandPolicy::error_on_negative, 17);
        FAIL() << "expected RadicandError";
    } catch (const RadicandError& e) {
        EXPECT_EQ(e.index(), 17u);
        EXPECT_DOUBLE_EQ(e.radicand(), -1.0);
    }
}

TEST(PolicyRoot, SignedSqrtIsOddAndSquaresBack) {
    for (int trial = 0; trial < 100; ++trial) {
        const double u = nldirac::testing::uniform(-10.0, 10.0);
        const double s = policy_root(u, RadicandPolicy::signed_sqrt);
        EXPECT_DOUBLE_EQ(policy_root(-u, RadicandPolicy::signed_sqrt), -s);
        EXPECT_NEAR(s * std::abs(s), u, 1e-13);
    }
}

TEST(CouplingFields, MatchPointwiseValues) {
    const FieldGrid grid(Grid1D::cartesian(12, 0.0, 1.0));
    const SpinorState s = SpinorState::sample(grid, [](double x, double) {
        return Spinor{{std::cos(3 * x), 0.2}, {x, -x * x}};
    });
    const CouplingFields f = compute_couplings(s, RadicandPolicy::clamp_to_zero);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const CouplingValues c = couplings_at(s.at(k), RadicandPolicy::clamp_to_zero);
        EXPECT_EQ(f.s_tilde[k], c.s_tilde);
        EXPECT_EQ(f.v_tilde[k], c.v_tilde);
        EXPECT_EQ(f.u_tilde[k], c.u_tilde);
        EXPECT_EQ(f.w_tilde[k], c.w_tilde);
    }
}

TEST(CouplingFields, ErrorPolicyReportsGridIndex) {
    const FieldGrid grid(Grid1D::cartesian(10, 0.0, 1.0));
    const SpinorState s = SpinorState::sample(grid, [](double x, double) {
        return x > 0.5 ? Spinor{0.1, 1.0} : Spinor{1.0, 0.1};
    });
    try {
        compute_couplings(s, RadicandPolicy::error_on_negative);
        FAIL() << "expected RadicandError";
    } catch (const RadicandError& e) {
        EXPECT_EQ(e.index(), 5u);
        EXPECT_LT(e.radicand(), 0.0);
    }
}

TEST(SpinorNorm, CartesianTrapezoidMatchesGaussianIntegral) {
    const FieldGrid grid(Grid1D::cartesian(128, -8.0, 8.0, Boundary::periodic),
                         Grid1D::cartesian(128, -8.0, 8.0, Boundary::periodic));
    const SpinorState s = SpinorState::sample(grid, [](double x, double y) {
        const double g = std::exp(-(x * x + y * y) / 2.0);
        return Spinor{g, Complex(0.0, 0.5 * g)};
    });
    // ∫ e^{-(x²+y²)} = π, times (1 + 1/4).
    EXPECT_NEAR(norm(s), 1.25 * std::numbers::pi, 1e-12);
}

TEST(SpinorNorm, CylindricalPsiCarriesRadialWeight) {
    const FieldGrid grid(Grid1D::radial(401, 1.0, 2.0), Grid1D::azimuthal(16));
    const SpinorState s = SpinorState::sample(grid, [](double, double) { return Spinor{1.0, 0.0}; });
    // ∫∫ r dr dθ over the annulus = π(4 − 1)
    EXPECT_NEAR(norm(s), 3.0 * std::numbers::pi, 1e-12);
}

TEST(SpinorField, RejectsNonFiniteAndMismatchedSizes) {
    const FieldGrid grid(Grid1D::cartesian(8, 0.0, 1.0));
    std::vector<Complex> ok(8), bad(8);
    bad[3] = {NAN, 0.0};
    EXPECT_THROW(SpinorState(grid, ok, bad), ContractViolation);
    EXPECT_THROW(SpinorState(grid, ok, std::vector<Complex>(7)), ContractViolation);
    EXPECT_THROW(PhiState(grid, ok, ok), ContractViolation);
}
