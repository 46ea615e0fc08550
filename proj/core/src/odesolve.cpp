#include "nldirac/odesolve.hpp"

#include "nldirac/error.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace nldirac {

namespace odeint = boost::numeric::odeint;

std::string_view to_string(HaltReason reason) {
    switch (reason) {
        case HaltReason::reached_end: return "reached-end";
        case HaltReason::pole_detected: return "pole-detected";
        case HaltReason::step_underflow: return "step-underflow";
    }
    return "unknown";
}

namespace {

using State = std::array<double, 4>;  // Re χ₊, Im χ₊, Re χ₋, Im χ₋

Spinor unpack(const State& x) { return {{x[0], x[1]}, {x[2], x[3]}}; }
State pack(const Spinor& s) { return {s.plus.real(), s.plus.imag(), s.minus.real(), s.minus.imag()}; }

bool blown_up(const State& x, double threshold) {
    return std::any_of(x.begin(), x.end(), [](double v) { return !std::isfinite(v); }) ||
           unpack(x).max_abs() > threshold;
}

constexpr std::size_t max_steps = 2'000'000;

}  // namespace

ReducedProfile IvpResult::profile() const {
    if (s.size() < Grid1D::min_points) {
        throw ContractViolation("integration stopped after " + std::to_string(s.size()) +
                                " output samples; too few for a profile grid");
    }
    const bool ascending = s.back() > s.front();
    const double lo = ascending ? s.front() : s.back();
    const double hi = ascending ? s.back() : s.front();
    ReducedProfile p{Grid1D(axis, s.size(), lo, hi, Boundary::dirichlet_zero), {}, {}, epsilon, wavenumber};
    p.chi_plus.resize(s.size());
    p.chi_minus.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t src = ascending ? i : s.size() - 1 - i;
        p.chi_plus[i] = chi[src].plus;
        p.chi_minus[i] = chi[src].minus;
    }
    return p;
}

IvpResult integrate(const IvpProblem& problem) {
    if (problem.output_points < 2) throw ContractViolation("need at least two output points");
    if (!std::isfinite(problem.s_start) || !std::isfinite(problem.s_end) || problem.s_start == problem.s_end) {
        throw ContractViolation("integration interval must be finite and non-empty");
    }
    const ReducedSystem& sys = problem.system;
    const bool cyl = sys.coordinates() == Coordinates::cylindrical;
    if (cyl && (problem.s_start <= 0.0 || problem.s_end <= 0.0)) {
        throw ContractViolation("radial integration needs r > 0 throughout");
    }

    IvpResult out{{}, {}, HaltReason::reached_end, problem.s_start, 0,
                  cyl ? AxisKind::radial : AxisKind::cartesian, sys.epsilon(), sys.wavenumber()};

    const double span = problem.s_end - problem.s_start;
    const double dir = span > 0.0 ? 1.0 : -1.0;
    auto output_at = [&](std::size_t i) {
        if (i + 1 == problem.output_points) return problem.s_end;
        return problem.s_start + span * static_cast<double>(i) / static_cast<double>(problem.output_points - 1);
    };

    auto rhs = [&](const State& x, State& dxds, double s) { dxds = pack(sys.derivative(s, unpack(x))); };

    auto stepper = odeint::make_dense_output(problem.abs_tol, problem.rel_tol, odeint::runge_kutta_dopri5<State>());
    State x = pack(problem.seed);
    stepper.initialize(x, problem.s_start, span * 1e-3);

    out.s.push_back(problem.s_start);
    out.chi.push_back(problem.seed);
    std::size_t next = 1;

    while (next < problem.output_points) {
        const double now = stepper.current_time();
        const double remaining = problem.s_end - now;
        // Never step past s_end: the right-hand side may be undefined beyond it.
        if (dir * (stepper.current_time_step() - remaining) > 0.0) {
            stepper.initialize(stepper.current_state(), now, remaining);
        }
        if (std::abs(stepper.current_time_step()) < 1e-14 * std::max(1.0, std::abs(now)) ||
            out.steps >= max_steps) {
            out.reason = HaltReason::step_underflow;
            break;
        }
        try {
            stepper.do_step(rhs);
        } catch (const odeint::step_adjustment_error&) {
            out.reason = HaltReason::step_underflow;
            break;
        }
        ++out.steps;
        const double t_new = stepper.current_time();
        const bool bad = blown_up(stepper.current_state(), problem.pole_threshold);

        while (next < problem.output_points && dir * (output_at(next) - t_new) <= 0.0) {
            State y;
            stepper.calc_state(output_at(next), y);
            if (blown_up(y, problem.pole_threshold)) break;
            out.s.push_back(output_at(next));
            out.chi.push_back(unpack(y));
            ++next;
        }
        if (bad) {
            out.reason = HaltReason::pole_detected;
            break;
        }
    }
    out.s_halt = out.reason == HaltReason::reached_end ? problem.s_end : stepper.current_time();
    return out;
}

}  // namespace nldirac
