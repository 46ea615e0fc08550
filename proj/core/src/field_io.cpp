#include "nldirac/field_io.hpp"

#include "nldirac/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string_view>

namespace nldirac {

namespace {

constexpr std::string_view cartesian_header = "t,x,y,re_plus,im_plus,re_minus,im_minus";
constexpr std::string_view cylindrical_header = "t,r,theta,re_plus,im_plus,re_minus,im_minus";
constexpr std::size_t columns = 7;

template <Frame F>
void write_rows(std::ostream& out, const SpinorField<F>& s) {
    const FieldGrid& g = s.grid();
    const std::string t = format_double(s.time());
    for (std::size_t i = 0; i < g.first_size(); ++i) {
        const std::string x = format_double(g.first().coordinate(i));
        for (std::size_t j = 0; j < g.second_size(); ++j) {
            const Spinor v = s.at(g.index(i, j));
            out << t << ',' << x << ',' << format_double(g.second_coordinate(j)) << ','
                << format_double(v.plus.real()) << ',' << format_double(v.plus.imag()) << ','
                << format_double(v.minus.real()) << ',' << format_double(v.minus.imag()) << '\n';
        }
    }
}

struct Row {
    std::size_t line;
    std::array<double, columns> v;
};

Row parse_row(std::string_view text, std::size_t line) {
    Row row{line, {}};
    std::size_t col = 0;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view cell = text.substr(0, comma);
        if (col >= columns) throw SchemaError("expected " + std::to_string(columns) + " columns", line);
        const char* end = cell.data() + cell.size();
        auto [ptr, ec] = std::from_chars(cell.data(), end, row.v[col]);
        if (ec != std::errc{} || ptr != end || cell.empty()) {
            throw SchemaError("column " + std::to_string(col + 1) + ": not a number: '" + std::string(cell) + "'",
                              line);
        }
        if (!std::isfinite(row.v[col])) {
            throw SchemaError("column " + std::to_string(col + 1) + ": non-finite value", line);
        }
        ++col;
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (col != columns) throw SchemaError("expected " + std::to_string(columns) + " columns, got " +
                                              std::to_string(col), line);
    return row;
}

bool close(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * std::max(1.0, scale); }

// Axis through uniformly spaced coordinates; `line` points at the row that
// introduced the last coordinate, for error reporting.
Grid1D infer_axis(AxisKind kind, const std::vector<double>& c, Boundary boundary, std::size_t line) {
    if (c.size() < Grid1D::min_points) {
        throw SchemaError("axis has " + std::to_string(c.size()) + " points; at least " +
                              std::to_string(Grid1D::min_points) + " required", line);
    }
    const double h = (c.back() - c.front()) / static_cast<double>(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!close(c[i], c.front() + static_cast<double>(i) * h, std::abs(c.back()) + std::abs(c.front()))) {
            throw SchemaError("coordinates are not uniformly spaced", line);
        }
    }
    double hi = c.back();
    if (boundary != Boundary::dirichlet_zero) {
        hi = kind == AxisKind::azimuthal ? c.front() + 2.0 * std::numbers::pi
                                         : c.front() + static_cast<double>(c.size()) * h;
    }
    try {
        return Grid1D(kind, c.size(), c.front(), hi, boundary);
    } catch (const ContractViolation& e) {
        throw SchemaError(e.what(), line);
    }
}

struct Block {
    double t;
    std::vector<Row> rows;
};

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw ContractViolation("number formatting failed");
    return std::string(buf.data(), ptr);
}

void write_field_header(std::ostream& out, Coordinates coords) {
    out << (coords == Coordinates::cartesian ? cartesian_header : cylindrical_header) << '\n';
}

void write_field_rows(std::ostream& out, const SpinorState& state) {
    if (state.grid().coordinates() != Coordinates::cartesian) {
        throw ContractViolation("cylindrical fields are written in the phi frame");
    }
    write_rows(out, state);
}

void write_field_rows(std::ostream& out, const PhiState& state) { write_rows(out, state); }

void write_diagnostics_header(std::ostream& out) { out << "t,norm,max_abs,dt,steps\n"; }

void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& r) {
    out << format_double(r.time) << ',' << format_double(r.norm) << ',' << format_double(r.max_amplitude) << ','
        << format_double(r.dt_current) << ',' << r.step_count << '\n';
}

FieldSeries read_field_csv(std::istream& in, const FieldReadOptions& options) {
    std::string text;
    std::size_t line = 0;
    auto next_line = [&]() -> bool {
        if (!std::getline(in, text)) return false;
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        return true;
    };

    if (!next_line()) throw SchemaError("empty file; expected a header", 1);
    FieldSeries series;
    if (text == cartesian_header) {
        series.coordinates = Coordinates::cartesian;
    } else if (text == cylindrical_header) {
        series.coordinates = Coordinates::cylindrical;
    } else {
        throw SchemaError("unrecognised header '" + text + "'", line);
    }
    const bool cyl = series.coordinates == Coordinates::cylindrical;

    std::vector<Block> blocks;
    while (next_line()) {
        if (text.empty() || text.front() == '#') continue;  // comments, e.g. a truncation marker
        Row row = parse_row(text, line);
        if (blocks.empty() || row.v[0] != blocks.back().t) {
            if (!blocks.empty() && row.v[0] < blocks.back().t) {
                throw SchemaError("snapshot times must increase", line);
            }
            blocks.push_back({row.v[0], {}});
        }
        blocks.back().rows.push_back(row);
    }
    if (blocks.empty()) throw SchemaError("no data rows", line + 1);

    for (const Block& b : blocks) {
        const auto& rows = b.rows;
        std::size_t n2 = 1;
        while (n2 < rows.size() && rows[n2].v[1] == rows[0].v[1]) ++n2;
        if (rows.size() % n2 != 0) throw SchemaError("snapshot is not a complete row-major grid", rows.back().line);
        const std::size_t n1 = rows.size() / n2;

        std::vector<double> c1(n1), c2(n2);
        for (std::size_t i = 0; i < n1; ++i) c1[i] = rows[i * n2].v[1];
        for (std::size_t j = 0; j < n2; ++j) c2[j] = rows[j].v[2];
        std::vector<Complex> plus(rows.size()), minus(rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Row& r = rows[k];
            if (r.v[1] != c1[k / n2] || r.v[2] != c2[k % n2]) {
                throw SchemaError("coordinates break the row-major grid layout", r.line);
            }
            plus[k] = {r.v[3], r.v[4]};
            minus[k] = {r.v[5], r.v[6]};
        }

        const std::size_t last = rows.back().line;
        const Grid1D first = infer_axis(cyl ? AxisKind::radial : AxisKind::cartesian, c1,
                                        cyl ? Boundary::dirichlet_zero : options.first_boundary, last);
        std::optional<FieldGrid> grid;
        double k = 0.0;
        if (n2 == 1) {
            grid.emplace(first);
            k = options.cyclic_wavenumber;
        } else {
            Boundary second = Boundary::dirichlet_zero;
            if (options.second_boundary) {
                second = *options.second_boundary;
            } else if (cyl && c2.front() == 0.0 &&
                       close(c2.back() + (c2.back() - c2.front()) / static_cast<double>(n2 - 1),
                             2.0 * std::numbers::pi, 1.0)) {
                second = Boundary::antiperiodic;
            }
            grid.emplace(first, infer_axis(cyl ? AxisKind::azimuthal : AxisKind::cartesian, c2, second, last));
        }
        try {
            if (cyl) {
                series.phi.emplace_back(*grid, std::move(plus), std::move(minus), b.t, k);
            } else {
                series.psi.emplace_back(*grid, std::move(plus), std::move(minus), b.t, k);
            }
        } catch (const ContractViolation& e) {
            throw SchemaError(e.what(), last);
        }
    }
    return series;
}

}  // namespace nldirac
