#pragma once

#include "nldirac/derivative.hpp"
#include "nldirac/models.hpp"
#include "nldirac/spinor.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace nldirac {

enum class Scheme { rk4_fixed, rk45_adaptive };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// Time-stepping settings. The Dirac operator has unit characteristic speed,
/// so the CFL ceiling is cfl_factor · (smallest physical grid spacing).
struct Integrator {
    Scheme scheme = Scheme::rk4_fixed;
    double dt = 0.0;  ///< rk4 step; 0 picks the CFL ceiling
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    double cfl_factor = 0.5;
    double blowup_threshold = 1e8;

    double cfl_limit(const FieldGrid& grid) const;
};

struct DiagnosticsRecord {
    double time;
    double norm;
    double max_amplitude;
    std::size_t step_count;
    double dt_current;  ///< size of the step that reached `time` (0 at the start)
};

template <Frame F>
struct Trajectory {
    std::vector<SpinorField<F>> samples;
    std::vector<DiagnosticsRecord> diagnostics;  ///< one per sample, same order
};

template <Frame F>
using EvolveObserver = std::function<void(const SpinorField<F>&, const DiagnosticsRecord&)>;

/// One classical RK4 step of ∂ₜψ = −iH(ψ)ψ. Negative dt steps backwards.
template <Frame F>
SpinorField<F> step(const ModelSpec& model, const SpinorField<F>& state, double dt,
                    const DerivativeOperator& deriv);

/// Integrate from initial.time() to t_final, keeping every `sample_every`-th
/// step and the final state. The observer, if any, sees each sample as it is
/// produced, so callers can stream output that survives a later failure.
///
/// Throws NumericalFailure on non-finite values or amplitudes above the
/// blow-up threshold, ContractViolation for an rk4 dt above the CFL ceiling.
template <Frame F>
Trajectory<F> evolve(const ModelSpec& model, const SpinorField<F>& initial, double t_final,
                     const Integrator& integrator, const DerivativeOperator& deriv,
                     std::size_t sample_every = 1, const EvolveObserver<F>& observer = {});

DiagnosticsRecord diagnose(const SpinorState& state, std::size_t step_count, double dt);
DiagnosticsRecord diagnose(const PhiState& state, std::size_t step_count, double dt);

}  // namespace nldirac
