#include "nldirac/spinor.hpp"

#include "nldirac/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace nldirac {

double Spinor::max_abs() const noexcept {
    return std::max(std::abs(plus), std::abs(minus));
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

template <Frame F>
SpinorField<F>::SpinorField(FieldGrid grid, std::vector<Complex> plus, std::vector<Complex> minus,
                            double time, double cyclic_wavenumber)
    : grid_(std::move(grid)),
      plus_(std::move(plus)),
      minus_(std::move(minus)),
      time_(time),
      cyclic_wavenumber_(cyclic_wavenumber) {
    if (plus_.size() != grid_.size() || minus_.size() != grid_.size()) {
        throw ContractViolation("spinor components must match the grid size " +
                                std::to_string(grid_.size()));
    }
    for (std::size_t k = 0; k < plus_.size(); ++k) {
        if (!finite(plus_[k]) || !finite(minus_[k])) {
            throw ContractViolation("non-finite amplitude at grid index " + std::to_string(k));
        }
    }
    if (!std::isfinite(time_) || !std::isfinite(cyclic_wavenumber_)) {
        throw ContractViolation("time and cyclic wavenumber must be finite");
    }
    if (F == Frame::phi && grid_.coordinates() != Coordinates::cylindrical) {
        throw ContractViolation("φ-frame fields live on (r, θ) grids");
    }
}

template <Frame F>
SpinorField<F> SpinorField<F>::zeros(FieldGrid grid, double time, double cyclic_wavenumber) {
    const std::size_t n = grid.size();
    return SpinorField(std::move(grid), std::vector<Complex>(n), std::vector<Complex>(n), time,
                       cyclic_wavenumber);
}

template <Frame F>
SpinorField<F> SpinorField<F>::sample(FieldGrid grid, const std::function<Spinor(double, double)>& f,
                                      double time, double cyclic_wavenumber) {
    std::vector<Complex> p(grid.size());
    std::vector<Complex> m(grid.size());
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        const double s0 = grid.first().coordinate(i);
        for (std::size_t j = 0; j < grid.second_size(); ++j) {
            const Spinor v = f(s0, grid.second_coordinate(j));
            const std::size_t k = grid.index(i, j);
            p[k] = v.plus;
            m[k] = v.minus;
        }
    }
    return SpinorField(std::move(grid), std::move(p), std::move(m), time, cyclic_wavenumber);
}

template <Frame F>
SpinorField<F> SpinorField<F>::with_time(double t) const {
    SpinorField out = *this;
    out.time_ = t;
    return out;
}

template <Frame F>
double SpinorField<F>::max_abs() const noexcept {
    double m = 0.0;
    for (std::size_t k = 0; k < plus_.size(); ++k) {
        m = std::max({m, std::abs(plus_[k]), std::abs(minus_[k])});
    }
    return m;
}

template class SpinorField<Frame::psi>;
template class SpinorField<Frame::phi>;

double norm(const FieldGrid& grid, Frame frame, std::span<const Complex> plus,
            std::span<const Complex> minus) {
    const auto w0 = grid.first().quadrature_weights();
    const auto w1 = grid.second() ? grid.second()->quadrature_weights() : std::vector<double>{1.0};
    const bool radial_measure = frame == Frame::psi && grid.coordinates() == Coordinates::cylindrical;

    double total = 0.0;
    for (std::size_t i = 0; i < grid.first_size(); ++i) {
        const double jac = radial_measure ? grid.first().coordinate(i) : 1.0;
        double row = 0.0;
        for (std::size_t j = 0; j < grid.second_size(); ++j) {
            const std::size_t k = grid.index(i, j);
            row += w1[j] * (std::norm(plus[k]) + std::norm(minus[k]));
        }
        total += w0[i] * jac * row;
    }
    return total;
}

template <Frame F>
double norm(const SpinorField<F>& state) {
    return norm(state.grid(), F, state.plus(), state.minus());
}

template double norm(const SpinorField<Frame::psi>&);
template double norm(const SpinorField<Frame::phi>&);

}  // namespace nldirac
