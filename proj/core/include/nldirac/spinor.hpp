#pragma once

#include "nldirac/grid.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nldirac {

using Complex = std::complex<double>;

inline constexpr Complex I{0.0, 1.0};

/// The two components (ψ₊, ψ₋) at a single point.
struct Spinor {
    Complex plus{};
    Complex minus{};

    Spinor& operator+=(const Spinor& o) { plus += o.plus; minus += o.minus; return *this; }
    Spinor& operator-=(const Spinor& o) { plus -= o.plus; minus -= o.minus; return *this; }
    Spinor& operator*=(Complex a) { plus *= a; minus *= a; return *this; }

    friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
    friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
    friend Spinor operator*(Complex a, Spinor s) { return s *= a; }
    friend Spinor operator*(Spinor s, Complex a) { return s *= a; }
    friend bool operator==(const Spinor&, const Spinor&) = default;

    double density() const noexcept { return std::norm(plus) + std::norm(minus); }
    double max_abs() const noexcept;
};

/// Which variables a field holds: the original spinor ψ, or the cylindrical
/// φ = √r e^{iθσ₃/2} ψ in which the cylindrical models are written.
enum class Frame { psi, phi };

/// Two complex amplitude fields on a grid, plus the time they refer to.
///
/// A slice field (one axis) stands for the y = 0 (or θ = 0) line of a field
/// that depends on the cyclic coordinate only through e^{i k y}
/// (e^{i κ θ}); `cyclic_wavenumber()` holds that k or κ.
template <Frame F>
class SpinorField {
public:
    SpinorField(FieldGrid grid, std::vector<Complex> plus, std::vector<Complex> minus,
                double time = 0.0, double cyclic_wavenumber = 0.0);

    static SpinorField zeros(FieldGrid grid, double time = 0.0, double cyclic_wavenumber = 0.0);

    /// Fill from f(first coordinate, second coordinate).
    static SpinorField sample(FieldGrid grid, const std::function<Spinor(double, double)>& f,
                              double time = 0.0, double cyclic_wavenumber = 0.0);

    const FieldGrid& grid() const noexcept { return grid_; }
    std::span<const Complex> plus() const noexcept { return plus_; }
    std::span<const Complex> minus() const noexcept { return minus_; }
    double time() const noexcept { return time_; }
    double cyclic_wavenumber() const noexcept { return cyclic_wavenumber_; }
    std::size_t size() const noexcept { return plus_.size(); }

    Spinor at(std::size_t k) const noexcept { return {plus_[k], minus_[k]}; }

    SpinorField with_time(double t) const;

    /// Largest |ψ±| over the grid.
    double max_abs() const noexcept;

private:
    FieldGrid grid_;
    std::vector<Complex> plus_;
    std::vector<Complex> minus_;
    double time_;
    double cyclic_wavenumber_;
};

using SpinorState = SpinorField<Frame::psi>;
using PhiState = SpinorField<Frame::phi>;

extern template class SpinorField<Frame::psi>;
extern template class SpinorField<Frame::phi>;

/// ∫ψ†ψ by the composite trapezoid rule.
///
/// Cartesian ψ: dx dy. Cylindrical ψ: r dr dθ. φ: dr dθ. On a slice the
/// integral runs over the single axis (a density per unit of the cyclic
/// coordinate).
template <Frame F>
double norm(const SpinorField<F>& state);

/// Same quadrature as `norm` applied to arbitrary component arrays.
double norm(const FieldGrid& grid, Frame frame, std::span<const Complex> plus,
            std::span<const Complex> minus);

}  // namespace nldirac
