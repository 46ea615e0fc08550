#include "nldirac/grid.hpp"

#include "nldirac/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace nldirac {

std::string_view to_string(AxisKind kind) {
    switch (kind) {
        case AxisKind::cartesian: return "cartesian";
        case AxisKind::radial: return "radial";
        case AxisKind::azimuthal: return "azimuthal";
    }
    return "unknown";
}

std::string_view to_string(Boundary boundary) {
    switch (boundary) {
        case Boundary::periodic: return "periodic";
        case Boundary::antiperiodic: return "antiperiodic";
        case Boundary::dirichlet_zero: return "dirichlet";
    }
    return "unknown";
}

std::string_view to_string(Coordinates coords) {
    return coords == Coordinates::cartesian ? "cartesian" : "cylindrical";
}

Grid1D::Grid1D(AxisKind kind, std::size_t n, double lo, double hi, Boundary boundary)
    : kind_(kind), n_(n), lo_(lo), hi_(hi), boundary_(boundary), spacing_(0.0) {
    if (n < min_points) {
        throw ContractViolation("grid needs at least " + std::to_string(min_points) +
                                " points, got " + std::to_string(n));
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
        throw ContractViolation("grid bounds must be finite with hi > lo");
    }
    if (kind == AxisKind::radial && !(lo > 0.0)) {
        throw ContractViolation("radial axis requires r_min > 0 (r = 0 is a coordinate singularity)");
    }
    if (kind == AxisKind::radial && boundary != Boundary::dirichlet_zero) {
        throw ContractViolation("radial axis must use Dirichlet boundaries");
    }
    if (kind == AxisKind::azimuthal && boundary != Boundary::dirichlet_zero &&
        std::abs((hi - lo) - 2.0 * std::numbers::pi) > 1e-12) {
        throw ContractViolation("a wrapped azimuthal axis must span a full 2π turn");
    }
    const double intervals = wraps() ? static_cast<double>(n) : static_cast<double>(n - 1);
    spacing_ = (hi - lo) / intervals;
}

Grid1D Grid1D::cartesian(std::size_t n, double lo, double hi, Boundary boundary) {
    return Grid1D(AxisKind::cartesian, n, lo, hi, boundary);
}

Grid1D Grid1D::radial(std::size_t n, double r_min, double r_max) {
    return Grid1D(AxisKind::radial, n, r_min, r_max, Boundary::dirichlet_zero);
}

Grid1D Grid1D::azimuthal(std::size_t n, Boundary boundary) {
    return Grid1D(AxisKind::azimuthal, n, 0.0, 2.0 * std::numbers::pi, boundary);
}

std::vector<double> Grid1D::coordinates() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = coordinate(i);
    return out;
}

std::vector<double> Grid1D::quadrature_weights() const {
    std::vector<double> w(n_, spacing_);
    if (!wraps()) {
        w.front() *= 0.5;
        w.back() *= 0.5;
    }
    return w;
}

Grid1D Grid1D::with_boundary(Boundary boundary) const {
    return Grid1D(kind_, n_, lo_, hi_, boundary);
}

std::size_t Grid1D::nearest_index(double s) const noexcept {
    const double k = std::round((s - lo_) / spacing_);
    if (!(k > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(k), n_ - 1);
}

FieldGrid::FieldGrid(const Grid1D& axis) : first_(axis) {
    if (axis.kind() == AxisKind::azimuthal) {
        throw ContractViolation("a field slice must lie along x or r, not θ");
    }
}

FieldGrid::FieldGrid(const Grid2D& plane) : FieldGrid(plane.x_axis, plane.y_axis) {}

FieldGrid::FieldGrid(const Grid1D& first, const Grid1D& second) : first_(first), second_(second) {
    const bool cart = first.kind() == AxisKind::cartesian && second.kind() == AxisKind::cartesian;
    const bool cyl = first.kind() == AxisKind::radial && second.kind() == AxisKind::azimuthal;
    if (!cart && !cyl) {
        throw ContractViolation("plane grids are (x, y) Cartesian or (r, θ) cylindrical");
    }
}

Coordinates FieldGrid::coordinates() const noexcept {
    return first_.kind() == AxisKind::radial ? Coordinates::cylindrical : Coordinates::cartesian;
}

double FieldGrid::min_physical_spacing() const noexcept {
    double h = first_.spacing();
    if (second_) {
        double h2 = second_->spacing();
        if (coordinates() == Coordinates::cylindrical) h2 *= first_.lo();
        h = std::min(h, h2);
    }
    return h;
}

}  // namespace nldirac
