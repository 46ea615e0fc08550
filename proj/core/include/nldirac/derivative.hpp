#pragma once

#include "nldirac/grid.hpp"
#include "nldirac/spinor.hpp"

#include <span>
#include <vector>

namespace nldirac {

enum class StencilOrder { second = 2, fourth = 4 };

/// Treatment of Dirichlet edges.
enum class EdgeTreatment {
    zero_ghost,  ///< values past the edge are 0; keeps the operator skew-symmetric
    one_sided,   ///< one-sided stencils of the same order near the edge
};

/// Central finite-difference first derivative on uniform axes.
///
/// Wrapped axes use the same central stencil everywhere (with a sign flip
/// across an antiperiodic seam). Applied to e^{iqx} on a periodic axis the
/// error is O(h^order).
class DerivativeOperator {
public:
    explicit DerivativeOperator(StencilOrder order = StencilOrder::fourth,
                                EdgeTreatment edges = EdgeTreatment::zero_ghost)
        : order_(order), edges_(edges) {}

    StencilOrder order() const noexcept { return order_; }
    EdgeTreatment edges() const noexcept { return edges_; }
    int half_width() const noexcept { return order_ == StencilOrder::second ? 1 : 2; }

    /// d/ds of a single line of samples along `axis`.
    void apply_line(const Grid1D& axis, std::span<const Complex> in, std::span<Complex> out,
                    std::size_t stride = 1) const;

    /// Derivative of a grid field along the first axis (x or r).
    std::vector<Complex> along_first(const FieldGrid& grid, std::span<const Complex> f) const;

    /// Derivative along the second axis (y or θ). On a slice grid this is
    /// i·k·f, the exact derivative of the e^{iks} dependence.
    std::vector<Complex> along_second(const FieldGrid& grid, std::span<const Complex> f,
                                      double cyclic_wavenumber) const;

private:
    StencilOrder order_;
    EdgeTreatment edges_;
};

}  // namespace nldirac
