#include "nldirac/evolve.hpp"

#include "nldirac/error.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace nldirac {

namespace odeint = boost::numeric::odeint;

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::rk4_fixed: return "rk4-fixed";
        case Scheme::rk45_adaptive: return "rk45-adaptive";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "rk4-fixed" || name == "rk4") return Scheme::rk4_fixed;
    if (name == "rk45-adaptive" || name == "rk45") return Scheme::rk45_adaptive;
    return std::nullopt;
}

double Integrator::cfl_limit(const FieldGrid& grid) const {
    if (!(cfl_factor > 0.0)) throw ContractViolation("cfl_factor must be positive");
    return cfl_factor * grid.min_physical_spacing();
}

namespace {

// Flat layout: ψ₊ over the grid, then ψ₋.
using State = std::vector<Complex>;

template <Frame F>
class System {
public:
    System(const ModelSpec& model, const FieldGrid& grid, double k, const DerivativeOperator& deriv)
        : model_(model), grid_(grid), k_(k), deriv_(deriv) {}

    void operator()(const State& x, State& dxdt, double /*t*/) const {
        const std::size_t n = grid_.size();
        std::span<const Complex> in(x);
        std::span<Complex> out(dxdt);
        apply_hamiltonian(model_, grid_, k_, in.first(n), in.subspan(n), deriv_, out.first(n), out.subspan(n));
        for (auto& v : dxdt) v *= -I;
    }

private:
    const ModelSpec& model_;
    const FieldGrid& grid_;
    double k_;
    const DerivativeOperator& deriv_;
};

template <Frame F>
State flatten(const SpinorField<F>& s) {
    State x(2 * s.size());
    std::copy(s.plus().begin(), s.plus().end(), x.begin());
    std::copy(s.minus().begin(), s.minus().end(), x.begin() + static_cast<std::ptrdiff_t>(s.size()));
    return x;
}

template <Frame F>
SpinorField<F> unflatten(const State& x, const SpinorField<F>& like, double t) {
    const auto n = static_cast<std::ptrdiff_t>(like.size());
    return SpinorField<F>(like.grid(), State(x.begin(), x.begin() + n), State(x.begin() + n, x.end()), t,
                          like.cyclic_wavenumber());
}

void check_state(const State& x, double threshold, std::size_t step_index, double t) {
    for (const auto& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericalFailure("non-finite value at step " + std::to_string(step_index) + " (t = " +
                                       std::to_string(t) + ")",
                                   step_index, t);
        }
        if (std::abs(v) > threshold) {
            throw NumericalFailure("amplitude above blow-up threshold at step " + std::to_string(step_index) +
                                       " (t = " + std::to_string(t) + ")",
                                   step_index, t);
        }
    }
}

template <Frame F>
DiagnosticsRecord diagnose_impl(const SpinorField<F>& s, std::size_t steps, double dt) {
    return {s.time(), norm(s), s.max_abs(), steps, dt};
}

}  // namespace

DiagnosticsRecord diagnose(const SpinorState& state, std::size_t step_count, double dt) {
    return diagnose_impl(state, step_count, dt);
}

DiagnosticsRecord diagnose(const PhiState& state, std::size_t step_count, double dt) {
    return diagnose_impl(state, step_count, dt);
}

template <Frame F>
SpinorField<F> step(const ModelSpec& model, const SpinorField<F>& state, double dt,
                    const DerivativeOperator& deriv) {
    check_compatible(model, state.grid(), F);
    System<F> sys(model, state.grid(), state.cyclic_wavenumber(), deriv);
    State x = flatten(state);
    odeint::runge_kutta4<State> rk4;
    rk4.do_step(sys, x, state.time(), dt);
    check_state(x, std::numeric_limits<double>::infinity(), 1, state.time() + dt);
    return unflatten(x, state, state.time() + dt);
}

template <Frame F>
Trajectory<F> evolve(const ModelSpec& model, const SpinorField<F>& initial, double t_final,
                     const Integrator& integrator, const DerivativeOperator& deriv, std::size_t sample_every,
                     const EvolveObserver<F>& observer) {
    check_compatible(model, initial.grid(), F);
    const double t0 = initial.time();
    if (!std::isfinite(t_final) || t_final < t0) {
        throw ContractViolation("t_final must be finite and not before the initial time");
    }
    if (sample_every == 0) throw ContractViolation("sample_every must be at least 1");

    Trajectory<F> traj;
    auto emit = [&](const SpinorField<F>& s, std::size_t steps, double dt) {
        traj.samples.push_back(s);
        traj.diagnostics.push_back(diagnose(s, steps, dt));
        if (observer) observer(traj.samples.back(), traj.diagnostics.back());
    };
    emit(initial, 0, 0.0);
    if (t_final == t0) return traj;

    const double ceiling = integrator.cfl_limit(initial.grid());
    const double span = t_final - t0;
    System<F> sys(model, initial.grid(), initial.cyclic_wavenumber(), deriv);
    State x = flatten(initial);
    std::size_t steps = 0;

    if (integrator.scheme == Scheme::rk4_fixed) {
        double dt = integrator.dt == 0.0 ? ceiling : integrator.dt;
        if (!(dt > 0.0)) throw ContractViolation("rk4 dt must be positive");
        if (dt > ceiling * (1.0 + 1e-12)) {
            throw ContractViolation("rk4 dt " + std::to_string(dt) + " exceeds the CFL ceiling " +
                                    std::to_string(ceiling));
        }
        // Shrink dt so an integer number of steps lands exactly on t_final.
        const auto n = static_cast<std::size_t>(std::ceil(span / dt * (1.0 - 1e-14)));
        dt = span / static_cast<double>(n);
        odeint::runge_kutta4<State> rk4;
        for (std::size_t i = 1; i <= n; ++i) {
            const double t = t0 + static_cast<double>(i - 1) * dt;
            rk4.do_step(sys, x, t, dt);
            ++steps;
            const double t_new = i == n ? t_final : t0 + static_cast<double>(i) * dt;
            check_state(x, integrator.blowup_threshold, steps, t_new);
            if (i % sample_every == 0 || i == n) emit(unflatten(x, initial, t_new), steps, dt);
        }
        return traj;
    }

    auto stepper = odeint::make_controlled(integrator.abs_tol, integrator.rel_tol, ceiling,
                                           odeint::runge_kutta_dopri5<State>());
    double t = t0;
    double dt = std::min(ceiling, span);
    const double dt_floor = 1e-14 * std::max(1.0, std::abs(t_final));
    while (t < t_final) {
        double trial = std::min(dt, t_final - t);
        const double before = t;
        odeint::controlled_step_result res;
        try {
            res = stepper.try_step(sys, x, t, trial);
        } catch (const odeint::step_adjustment_error&) {
            throw NumericalFailure("adaptive step rejected at step " + std::to_string(steps + 1), steps + 1, t);
        }
        if (res == odeint::fail) {
            if (trial < dt_floor) {
                throw NumericalFailure("step size underflow at step " + std::to_string(steps + 1), steps + 1, t);
            }
            dt = trial;
            continue;
        }
        ++steps;
        const double taken = t - before;
        // try_step suggests the next step in `trial`; never exceed the CFL ceiling.
        dt = std::min(trial, ceiling);
        if (t_final - t < dt_floor) t = t_final;
        check_state(x, integrator.blowup_threshold, steps, t);
        if (steps % sample_every == 0 || t == t_final) emit(unflatten(x, initial, t), steps, taken);
    }
    return traj;
}

template SpinorField<Frame::psi> step(const ModelSpec&, const SpinorField<Frame::psi>&, double,
                                      const DerivativeOperator&);
template SpinorField<Frame::phi> step(const ModelSpec&, const SpinorField<Frame::phi>&, double,
                                      const DerivativeOperator&);
template Trajectory<Frame::psi> evolve(const ModelSpec&, const SpinorField<Frame::psi>&, double,
                                       const Integrator&, const DerivativeOperator&, std::size_t,
                                       const EvolveObserver<Frame::psi>&);
template Trajectory<Frame::phi> evolve(const ModelSpec&, const SpinorField<Frame::phi>&, double,
                                       const Integrator&, const DerivativeOperator&, std::size_t,
                                       const EvolveObserver<Frame::phi>&);

}  // namespace nldirac
