#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace nldirac {

enum class AxisKind { cartesian, radial, azimuthal };

/// How a field continues past the ends of an axis.
///
/// periodic and antiperiodic axes do not store the endpoint `hi`; it is the
/// wrap point. antiperiodic wraps with a sign flip, which is how the
/// half-angle factor of the cylindrical spinor map shows up on a closed disk.
enum class Boundary { periodic, antiperiodic, dirichlet_zero };

enum class Coordinates { cartesian, cylindrical };

std::string_view to_string(AxisKind kind);
std::string_view to_string(Boundary boundary);
std::string_view to_string(Coordinates coords);

/// Uniform one-dimensional axis.
class Grid1D {
public:
    static constexpr std::size_t min_points = 8;

    Grid1D(AxisKind kind, std::size_t n, double lo, double hi, Boundary boundary);

    static Grid1D cartesian(std::size_t n, double lo, double hi,
                            Boundary boundary = Boundary::dirichlet_zero);
    static Grid1D radial(std::size_t n, double r_min, double r_max);
    /// Full circle [0, 2π). Use Boundary::antiperiodic for φ-frame fields.
    static Grid1D azimuthal(std::size_t n, Boundary boundary = Boundary::periodic);

    AxisKind kind() const noexcept { return kind_; }
    Boundary boundary() const noexcept { return boundary_; }
    std::size_t size() const noexcept { return n_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double length() const noexcept { return hi_ - lo_; }
    double spacing() const noexcept { return spacing_; }
    bool wraps() const noexcept { return boundary_ != Boundary::dirichlet_zero; }

    double coordinate(std::size_t i) const noexcept { return lo_ + static_cast<double>(i) * spacing_; }
    std::vector<double> coordinates() const;

    /// Composite trapezoid weights (uniform on wrapped axes).
    std::vector<double> quadrature_weights() const;

    Grid1D with_boundary(Boundary boundary) const;

    /// Index of the grid point closest to `s` (clamped to the axis).
    std::size_t nearest_index(double s) const noexcept;

    bool operator==(const Grid1D&) const = default;

private:
    AxisKind kind_;
    std::size_t n_;
    double lo_;
    double hi_;
    Boundary boundary_;
    double spacing_;
};

/// Tensor-product plane: first axis is x (or r), second is y (or θ).
struct Grid2D {
    Grid1D x_axis;
    Grid1D y_axis;
};

/// The grid a spinor field lives on: one axis (a slice along the cyclic
/// coordinate) or two. Storage is row-major: first axis outer.
class FieldGrid {
public:
    FieldGrid(const Grid1D& axis);  // NOLINT(google-explicit-constructor)
    FieldGrid(const Grid2D& plane);  // NOLINT(google-explicit-constructor)
    FieldGrid(const Grid1D& first, const Grid1D& second);

    const Grid1D& first() const noexcept { return first_; }
    const std::optional<Grid1D>& second() const noexcept { return second_; }
    bool is_plane() const noexcept { return second_.has_value(); }

    std::size_t first_size() const noexcept { return first_.size(); }
    std::size_t second_size() const noexcept { return second_ ? second_->size() : 1; }
    std::size_t size() const noexcept { return first_size() * second_size(); }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * second_size() + j; }

    Coordinates coordinates() const noexcept;

    /// Coordinate along the second axis; 0 for a slice.
    double second_coordinate(std::size_t j) const noexcept { return second_ ? second_->coordinate(j) : 0.0; }

    /// Smallest physical spacing, counting r_min·Δθ on cylindrical planes.
    double min_physical_spacing() const noexcept;

    bool operator==(const FieldGrid&) const = default;

private:
    Grid1D first_;
    std::optional<Grid1D> second_;
};

}  // namespace nldirac
