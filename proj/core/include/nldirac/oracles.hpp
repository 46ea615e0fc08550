#pragma once

#include "nldirac/models.hpp"
#include "nldirac/reductions.hpp"

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nldirac {

/// Which closed-form amplitude goes to which spinor component.
enum class Assignment {
    as_printed,  ///< χ₊ = f₊, χ₋ = f₋
    swapped,     ///< χ₊ = f₋, χ₋ = f₊
};

std::string_view to_string(Assignment a);

/// Reading of the row-1 tan/cot argument.
enum class RadicalScope {
    root_covers_r,  ///< 2c·√(β₊β₋)·√r (accepted)
    linear_r,       ///< 2c·√(β₊β₋)·r (rejected; kept as a must-fail reading)
};

/// Free constants of the four closed-form families. Each row reads only
/// the constants it uses:
///   row 1: c, beta_plus, beta_minus        row 2: c1, c2, alpha_minus
///   row 3: m, alpha_w                      row 4: m, alpha_plus
struct OracleConstants {
    double c = 0.5;
    double beta_plus = 1.0;
    double beta_minus = 1.0;
    double c1 = 1.0;
    double c2 = 2.0;
    double alpha_minus = 1.5;
    double m = 1.0;
    double alpha_w = 1.0;
    double alpha_plus = 1.0;

    /// Set by name (the names listed above); throws ContractViolation.
    void set(std::string_view name, double value);
    static std::span<const std::string_view> names() noexcept;
};

/// f±(s) and their exact first derivatives.
struct AmplitudeJet {
    double f_plus;
    double f_minus;
    double df_plus;
    double df_minus;

    Spinor chi(Assignment a) const noexcept;
    Spinor dchi(Assignment a) const noexcept;
};

struct Interval {
    double lo;
    double hi;
    bool contains(double s) const noexcept { return s > lo && s < hi; }
};

/// A closed-form stationary solution with its model, quantum numbers and
/// validity domain.
///
/// Rows 1 and 2 solve the cylindrical eq13 system (m = ε = 0, κ = 0),
/// row 3 solves eq7 and row 4 eq12 (both with ε = m, k = 0).
class AnalyticSolution {
public:
    AnalyticSolution(int row, OracleConstants constants, RadicalScope scope = RadicalScope::root_covers_r);

    int row() const noexcept { return row_; }
    const OracleConstants& constants() const noexcept { return constants_; }
    RadicalScope scope() const noexcept { return scope_; }

    EquationId equation() const noexcept;
    ModelSpec model() const;
    double epsilon() const noexcept;
    double wavenumber() const noexcept { return 0.0; }
    ReducedSystem system() const;

    /// Human-readable list of the fixed parameter values.
    std::string constraints() const;

    /// Open interval on which the closed form solves its reduced system.
    Interval domain() const noexcept;
    std::vector<double> singular_points() const;

    /// Throws DomainError outside `domain()`, naming the nearest singular point.
    AmplitudeJet evaluate(double s) const;

    /// The closed-form expressions without the domain check.
    AmplitudeJet evaluate_unchecked(double s) const noexcept;

private:
    int row_;
    OracleConstants constants_;
    RadicalScope scope_;
};

inline constexpr double verification_tolerance = 1e-10;

struct VerificationReport {
    int row;
    EquationId model;
    std::vector<double> probes;
    Interval domain;
    double residual_as_printed;  ///< scaled residual with χ₊ = f₊, χ₋ = f₋
    double residual_swapped;     ///< scaled residual with χ₊ = f₋, χ₋ = f₊
    double max_residual;         ///< the smaller of the two
    double max_abs_residual;     ///< unscaled residual under `assignment_used`
    Assignment assignment_used;
    bool pass;
};

/// Seven probes spread over the domain (five fixed points for row 4).
std::vector<double> default_probes(const AnalyticSolution& solution);

/// Seed point (lo) and end point (hi) for reproducing a row by integration:
/// pole-free for row 1, away from the origin for the others.
Interval default_ivp_span(const AnalyticSolution& solution);

/// Reduced residual of the closed form with exact derivatives under both
/// component assignments. Residuals are scaled by the largest term of the
/// equation (at least 1). Needs ≥ 5 probes strictly inside the domain.
VerificationReport verify_row(const AnalyticSolution& solution, std::span<const double> probes);
VerificationReport verify_row(const AnalyticSolution& solution);

/// The closed form sampled on a grid inside the domain.
ReducedProfile sample_profile(const AnalyticSolution& solution, const Grid1D& grid, Assignment assignment);
ProfileDerivatives exact_derivatives(const AnalyticSolution& solution, const Grid1D& grid,
                                     Assignment assignment);

}  // namespace nldirac
