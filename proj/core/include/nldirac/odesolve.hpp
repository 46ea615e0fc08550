#pragma once

#include "nldirac/reductions.hpp"
#include "nldirac/spinor.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace nldirac {

enum class HaltReason { reached_end, pole_detected, step_underflow };

std::string_view to_string(HaltReason reason);

/// Initial-value problem for a reduced system in explicit form
/// χ′ = F(s, χ), seeded at s_start. s_end may lie on either side.
struct IvpProblem {
    ReducedSystem system;
    double s_start;
    double s_end;
    Spinor seed;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double pole_threshold = 1e8;       ///< halt once any |χ±| exceeds this
    std::size_t output_points = 201;   ///< uniform dense-output samples over [s_start, s_end]
};

struct IvpResult {
    std::vector<double> s;     ///< output samples reached before halting
    std::vector<Spinor> chi;
    HaltReason reason;
    double s_halt;             ///< where integration stopped
    std::size_t steps;
    AxisKind axis;             ///< cartesian (x) or radial (r)
    double epsilon;
    double wavenumber;

    /// The samples as a profile on their uniform grid (ascending in s).
    /// Throws ContractViolation if fewer than Grid1D::min_points were reached.
    ReducedProfile profile() const;
};

/// Adaptive Dormand–Prince 5(4) with dense output.
IvpResult integrate(const IvpProblem& problem);

}  // namespace nldirac
