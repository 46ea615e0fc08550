#include "test_support.hpp"

#include <nldirac/error.hpp>
#include <nldirac/field_io.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace nldirac;
using nldirac::testing::random_complex;

namespace {

template <Frame F>
SpinorField<F> random_field(const FieldGrid& grid, double t) {
    std::vector<Complex> p(grid.size()), m(grid.size());
    for (auto& v : p) v = random_complex(3.0);
    for (auto& v : m) v = random_complex(1e-7);
    return SpinorField<F>(grid, p, m, t);
}

std::size_t schema_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_field_csv(in);
    } catch (const SchemaError& e) {
        return e.line();
    }
    return 0;
}

std::string cartesian_file(std::size_t n1, std::size_t n2, int t = 0) {
    std::ostringstream out;
    write_field_header(out, Coordinates::cartesian);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) out << t << ',' << i << ',' << j << ",1,0,0,0\n";
    }
    return out.str();
}

}  // namespace

TEST(FormatDouble, SeventeenSignificantDigitsRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
    for (int i = 0; i < 1000; ++i) {
        const double v = nldirac::testing::uniform(-1e6, 1e6) * std::pow(10.0, nldirac::testing::uniform(-20, 20));
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(FieldCsv, CartesianRoundTripIsBitExact) {
    const FieldGrid grid(Grid1D::cartesian(9, -1.0, 1.0), Grid1D::cartesian(10, 0.0, 3.0));
    const SpinorState a = random_field<Frame::psi>(grid, 0.0);
    const SpinorState b = random_field<Frame::psi>(grid, 0.25);
    std::stringstream io;
    write_field_header(io, Coordinates::cartesian);
    write_field_rows(io, a);
    write_field_rows(io, b);
    const FieldSeries s = read_field_csv(io);
    ASSERT_EQ(s.coordinates, Coordinates::cartesian);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.psi[1].time(), 0.25);
    EXPECT_EQ(s.psi[0].grid().first_size(), 9u);
    EXPECT_EQ(s.psi[0].grid().second_size(), 10u);
    EXPECT_NEAR(s.psi[0].grid().first().spacing(), 0.25, 1e-15);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        EXPECT_EQ(s.psi[0].at(k), a.at(k));
        EXPECT_EQ(s.psi[1].at(k), b.at(k));
    }
}

TEST(FieldCsv, CylindricalFullCircleReadsAsAntiperiodic) {
    const FieldGrid grid(Grid1D::radial(8, 0.5, 2.0), Grid1D::azimuthal(12, Boundary::antiperiodic));
    const PhiState a = random_field<Frame::phi>(grid, 1.0);
    std::stringstream io;
    write_field_header(io, Coordinates::cylindrical);
    write_field_rows(io, a);
    const FieldSeries s = read_field_csv(io);
    ASSERT_EQ(s.coordinates, Coordinates::cylindrical);
    ASSERT_EQ(s.phi.size(), 1u);
    const Grid1D& theta = *s.phi[0].grid().second();
    EXPECT_EQ(theta.boundary(), Boundary::antiperiodic);
    EXPECT_NEAR(theta.hi(), 2.0 * std::numbers::pi, 1e-12);
    for (std::size_t k = 0; k < grid.size(); ++k) EXPECT_EQ(s.phi[0].at(k), a.at(k));
}

TEST(FieldCsv, PeriodicOptionAndSliceWavenumber) {
    const FieldGrid line(Grid1D::cartesian(16, 0.0, 4.0, Boundary::periodic));
    const SpinorState a = random_field<Frame::psi>(line, 0.0);
    std::stringstream io;
    write_field_header(io, Coordinates::cartesian);
    write_field_rows(io, a);
    FieldReadOptions opt;
    opt.first_boundary = Boundary::periodic;
    opt.cyclic_wavenumber = 1.5;
    const FieldSeries s = read_field_csv(io, opt);
    EXPECT_FALSE(s.psi[0].grid().is_plane());
    EXPECT_EQ(s.psi[0].grid().first().boundary(), Boundary::periodic);
    EXPECT_NEAR(s.psi[0].grid().first().hi(), 4.0, 1e-14);
    EXPECT_EQ(s.psi[0].cyclic_wavenumber(), 1.5);
}

TEST(FieldCsv, CommentsBlankLinesAndCarriageReturnsAreIgnored) {
    std::string text = cartesian_file(8, 8);
    text.insert(text.find('\n') + 1, "# produced by a test\n\n");
    std::string crlf;
    for (char c : text) {
        if (c == '\n') crlf += '\r';
        crlf += c;
    }
    std::istringstream in(crlf + "# truncated: step 3\n");
    EXPECT_EQ(read_field_csv(in).size(), 1u);
}

TEST(FieldCsv, SchemaErrorsCarryLineNumbers) {
    EXPECT_EQ(schema_line(""), 1u);
    EXPECT_EQ(schema_line("a,b,c\n"), 1u);
    EXPECT_EQ(schema_line("t,x,y,re_plus,im_plus,re_minus,im_minus\n"), 2u);

    std::string bad_number = cartesian_file(8, 8);
    bad_number.replace(bad_number.find("0,2,3,1"), 7, "0,2,3,z");
    EXPECT_EQ(schema_line(bad_number), 1u + 2 * 8 + 3 + 1);

    std::string short_row = cartesian_file(8, 8);
    short_row.replace(short_row.find("0,1,0,1,0,0,0"), 13, "0,1,0,1,0,0");
    EXPECT_EQ(schema_line(short_row), 1u + 8 + 1);

    // Too few points along the first axis.
    EXPECT_GT(schema_line(cartesian_file(4, 8)), 1u);

    std::string uneven = cartesian_file(8, 8);
    for (int j = 0; j < 8; ++j) {
        const std::string from = "0,7," + std::to_string(j) + ",";
        uneven.replace(uneven.find(from), from.size(), "0,9," + std::to_string(j) + ",");
    }
    EXPECT_GT(schema_line(uneven), 1u);

    std::string backwards = cartesian_file(8, 8, 1);
    const std::string second = cartesian_file(8, 8, 0);
    backwards += second.substr(second.find('\n') + 1);
    EXPECT_EQ(schema_line(backwards), 1u + 64 + 1);
}

TEST(FieldCsv, RejectsCylindricalPsi) {
    const FieldGrid grid(Grid1D::radial(8, 0.5, 2.0), Grid1D::azimuthal(8));
    std::ostringstream out;
    EXPECT_THROW(write_field_rows(out, SpinorState::zeros(grid)), ContractViolation);
}

TEST(DiagnosticsCsv, Layout) {
    std::ostringstream out;
    write_diagnostics_header(out);
    write_diagnostics_row(out, {0.5, 2.0, 0.125, 7, 0.01});
    EXPECT_EQ(out.str(), "t,norm,max_abs,dt,steps\n0.5,2,0.125,0.01,7\n");
}
