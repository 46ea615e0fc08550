#include <nldirac/error.hpp>
#include <nldirac/grid.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace nldirac;

TEST(Grid1D, DirichletSpacingIncludesBothEnds) {
    const Grid1D g = Grid1D::cartesian(11, 0.0, 1.0);
    EXPECT_DOUBLE_EQ(g.spacing(), 0.1);
    EXPECT_DOUBLE_EQ(g.coordinate(10), 1.0);
    EXPECT_FALSE(g.wraps());
}

TEST(Grid1D, PeriodicSpacingOmitsWrapPoint) {
    const Grid1D g = Grid1D::cartesian(10, 0.0, 1.0, Boundary::periodic);
    EXPECT_DOUBLE_EQ(g.spacing(), 0.1);
    EXPECT_NEAR(g.coordinate(9), 0.9, 1e-15);
}

TEST(Grid1D, RejectsBadConstruction) {
    EXPECT_THROW(Grid1D::cartesian(7, 0.0, 1.0), ContractViolation);
    EXPECT_THROW(Grid1D::cartesian(16, 1.0, 1.0), ContractViolation);
    EXPECT_THROW(Grid1D::cartesian(16, 0.0, NAN), ContractViolation);
    EXPECT_THROW(Grid1D::radial(16, 0.0, 1.0), ContractViolation);
    EXPECT_THROW(Grid1D(AxisKind::radial, 16, 0.5, 1.0, Boundary::periodic), ContractViolation);
    EXPECT_THROW(Grid1D(AxisKind::azimuthal, 16, 0.0, 3.0, Boundary::periodic), ContractViolation);
    EXPECT_NO_THROW(Grid1D(AxisKind::azimuthal, 16, 0.0, 1.0, Boundary::dirichlet_zero));
}

TEST(Grid1D, TrapezoidWeightsIntegrateLinearExactly) {
    const Grid1D g = Grid1D::cartesian(9, -1.0, 3.0);
    const auto w = g.quadrature_weights();
    double sum = 0.0, first = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        sum += w[i];
        first += w[i] * (2.0 * g.coordinate(i) + 1.0);
    }
    EXPECT_NEAR(sum, 4.0, 1e-14);
    EXPECT_NEAR(first, 12.0, 1e-13);  // ∫(2x+1) over [-1, 3]
}

TEST(Grid1D, PeriodicWeightsAreSpectrallyAccurate) {
    const Grid1D g = Grid1D::azimuthal(32);
    const auto w = g.quadrature_weights();
    double integral = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) integral += w[i] * std::exp(std::cos(g.coordinate(i)));
    // 2π I₀(1)
    EXPECT_NEAR(integral, 2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0), 1e-13);
}

TEST(Grid1D, NearestIndexClamps) {
    const Grid1D g = Grid1D::cartesian(11, 0.0, 1.0);
    EXPECT_EQ(g.nearest_index(-5.0), 0u);
    EXPECT_EQ(g.nearest_index(0.34), 3u);
    EXPECT_EQ(g.nearest_index(7.0), 10u);
}

TEST(FieldGrid, RowMajorLayoutAndCoordinates) {
    const FieldGrid fg(Grid1D::cartesian(8, 0.0, 1.0), Grid1D::cartesian(10, 0.0, 1.0, Boundary::periodic));
    EXPECT_EQ(fg.size(), 80u);
    EXPECT_EQ(fg.index(2, 3), 23u);
    EXPECT_TRUE(fg.is_plane());
    EXPECT_EQ(fg.coordinates(), Coordinates::cartesian);
}

TEST(FieldGrid, SliceHasOneColumn) {
    const FieldGrid fg(Grid1D::radial(16, 0.5, 2.0));
    EXPECT_FALSE(fg.is_plane());
    EXPECT_EQ(fg.second_size(), 1u);
    EXPECT_EQ(fg.second_coordinate(0), 0.0);
    EXPECT_EQ(fg.coordinates(), Coordinates::cylindrical);
}

TEST(FieldGrid, RejectsMixedAxes) {
    EXPECT_THROW(FieldGrid(Grid1D::cartesian(8, 0, 1), Grid1D::azimuthal(8)), ContractViolation);
    EXPECT_THROW(FieldGrid(Grid1D::azimuthal(8)), ContractViolation);
}

TEST(FieldGrid, CylindricalMinimumSpacingUsesInnerArc) {
    const FieldGrid fg(Grid1D::radial(11, 0.1, 1.1), Grid1D::azimuthal(16));
    EXPECT_NEAR(fg.min_physical_spacing(), 0.1 * 2.0 * std::numbers::pi / 16.0, 1e-15);
}
