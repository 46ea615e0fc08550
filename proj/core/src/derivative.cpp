#include "nldirac/derivative.hpp"

#include "nldirac/error.hpp"

#include <array>

namespace nldirac {

namespace {

// Value at index i + offset with the axis continuation rule; `i` in range.
Complex neighbour(const Grid1D& axis, std::span<const Complex> in, std::size_t stride,
                  std::ptrdiff_t i, std::ptrdiff_t offset) {
    const auto n = static_cast<std::ptrdiff_t>(axis.size());
    std::ptrdiff_t j = i + offset;
    if (j >= 0 && j < n) return in[static_cast<std::size_t>(j) * stride];
    switch (axis.boundary()) {
        case Boundary::dirichlet_zero: return {0.0, 0.0};
        case Boundary::periodic: {
            j = ((j % n) + n) % n;
            return in[static_cast<std::size_t>(j) * stride];
        }
        case Boundary::antiperiodic: {
            double sign = 1.0;
            while (j < 0) { j += n; sign = -sign; }
            while (j >= n) { j -= n; sign = -sign; }
            return sign * in[static_cast<std::size_t>(j) * stride];
        }
    }
    return {0.0, 0.0};
}

// One-sided first-derivative weights at distance `d` (0 or 1) from the left
// edge, applied to samples f[0..4] (or f[0..2] for second order).
constexpr std::array<double, 5> left_fourth_0{-25.0, 48.0, -36.0, 16.0, -3.0};  // /12h
constexpr std::array<double, 5> left_fourth_1{-3.0, -10.0, 18.0, -6.0, 1.0};    // /12h
constexpr std::array<double, 3> left_second_0{-3.0, 4.0, -1.0};                 // /2h

}  // namespace

void DerivativeOperator::apply_line(const Grid1D& axis, std::span<const Complex> in,
                                    std::span<Complex> out, std::size_t stride) const {
    const auto n = static_cast<std::ptrdiff_t>(axis.size());
    const double h = axis.spacing();
    const bool one_sided = edges_ == EdgeTreatment::one_sided && !axis.wraps();
    const int hw = half_width();

    auto at = [&](std::ptrdiff_t i) { return in[static_cast<std::size_t>(i) * stride]; };

    for (std::ptrdiff_t i = 0; i < n; ++i) {
        Complex d;
        const std::ptrdiff_t from_left = i;
        const std::ptrdiff_t from_right = n - 1 - i;
        if (one_sided && (from_left < hw || from_right < hw)) {
            // Mirror the left-edge weights for the right edge (with a sign flip).
            const bool left = from_left < hw;
            const std::ptrdiff_t dist = left ? from_left : from_right;
            const double sgn = left ? 1.0 : -1.0;
            auto sample = [&](std::ptrdiff_t k) { return left ? at(k) : at(n - 1 - k); };
            if (order_ == StencilOrder::fourth) {
                const auto& w = dist == 0 ? left_fourth_0 : left_fourth_1;
                for (std::ptrdiff_t k = 0; k < 5; ++k) d += w[static_cast<std::size_t>(k)] * sample(k);
                d *= sgn / (12.0 * h);
            } else {
                for (std::ptrdiff_t k = 0; k < 3; ++k) d += left_second_0[static_cast<std::size_t>(k)] * sample(k);
                d *= sgn / (2.0 * h);
            }
        } else if (order_ == StencilOrder::fourth) {
            const Complex f1 = neighbour(axis, in, stride, i, 1);
            const Complex fm1 = neighbour(axis, in, stride, i, -1);
            const Complex f2 = neighbour(axis, in, stride, i, 2);
            const Complex fm2 = neighbour(axis, in, stride, i, -2);
            d = (8.0 * (f1 - fm1) - (f2 - fm2)) / (12.0 * h);
        } else {
            d = (neighbour(axis, in, stride, i, 1) - neighbour(axis, in, stride, i, -1)) / (2.0 * h);
        }
        out[static_cast<std::size_t>(i) * stride] = d;
    }
}

std::vector<Complex> DerivativeOperator::along_first(const FieldGrid& grid,
                                                     std::span<const Complex> f) const {
    if (f.size() != grid.size()) throw ContractViolation("field size does not match grid");
    std::vector<Complex> out(f.size());
    const std::size_t stride = grid.second_size();
    for (std::size_t j = 0; j < stride; ++j) {
        apply_line(grid.first(), f.subspan(j), std::span<Complex>(out).subspan(j), stride);
    }
    return out;
}

std::vector<Complex> DerivativeOperator::along_second(const FieldGrid& grid,
                                                      std::span<const Complex> f,
                                                      double cyclic_wavenumber) const {
    if (f.size() != grid.size()) throw ContractViolation("field size does not match grid");
    std::vector<Complex> out(f.size());
    if (!grid.is_plane()) {
        const Complex ik = I * cyclic_wavenumber;
        for (std::size_t k = 0; k < f.size(); ++k) out[k] = ik * f[k];
        return out;
    }
    const std::size_t n1 = grid.second_size();
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        apply_line(*grid.second(), f.subspan(i * n1, n1), std::span<Complex>(out).subspan(i * n1, n1));
    }
    return out;
}

}  // namespace nldirac
