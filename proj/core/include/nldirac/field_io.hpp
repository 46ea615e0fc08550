#pragma once

#include "nldirac/evolve.hpp"
#include "nldirac/spinor.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nldirac {

/// Shortest-round-trip-safe text for a double: 17 significant digits,
/// '.' decimal point, independent of the global locale.
std::string format_double(double value);

/// Field CSV. Cartesian files hold ψ under `t,x,y,re_plus,im_plus,re_minus,im_minus`;
/// cylindrical files hold φ under `t,r,theta,...`. Rows are row-major over
/// the grid (first axis outer); several snapshots may follow one another,
/// each with its own t.
void write_field_header(std::ostream& out, Coordinates coords);
void write_field_rows(std::ostream& out, const SpinorState& state);
void write_field_rows(std::ostream& out, const PhiState& state);

/// Diagnostics CSV: `t,norm,max_abs,dt,steps`.
void write_diagnostics_header(std::ostream& out);
void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& record);

/// What the file cannot say about the grid.
struct FieldReadOptions {
    Boundary first_boundary = Boundary::dirichlet_zero;
    /// Unset: a cylindrical θ column covering the full circle is read as
    /// antiperiodic, anything else as Dirichlet.
    std::optional<Boundary> second_boundary;
    double cyclic_wavenumber = 0.0;                        ///< for single-column (slice) files
};

struct FieldSeries {
    Coordinates coordinates = Coordinates::cartesian;
    std::vector<SpinorState> psi;  ///< Cartesian snapshots
    std::vector<PhiState> phi;     ///< cylindrical snapshots

    std::size_t size() const noexcept { return coordinates == Coordinates::cartesian ? psi.size() : phi.size(); }
};

/// Parse a field CSV, inferring the grid from the coordinate columns.
/// Lines starting with '#' are skipped.
/// Throws SchemaError carrying the offending 1-based line.
FieldSeries read_field_csv(std::istream& in, const FieldReadOptions& options = {});

}  // namespace nldirac
