#pragma once

#include "nldirac/models.hpp"
#include "nldirac/spinor.hpp"

#include <span>
#include <vector>

namespace nldirac {

/// Sum of Gaussian-modulated plane waves with exact first partials.
///
/// Each mode is A± · exp(−|p − c|²/w²) · exp(i(q·p − ωt)) with p the two
/// spatial coordinates (x, y) or (r, θ).
class AnalyticTestField {
public:
    struct Mode {
        Complex amp_plus;
        Complex amp_minus;
        double center0;
        double center1;
        double width;
        double q0;
        double q1;
        double omega;
    };

    struct Sample {
        Spinor value;
        Spinor dt;
        Spinor d0;
        Spinor d1;
    };

    explicit AnalyticTestField(std::vector<Mode> modes) : modes_(std::move(modes)) {}

    /// Two overlapping modes with unequal amplitudes and phases.
    static AnalyticTestField standard();

    Sample at(double t, double s0, double s1) const;

private:
    std::vector<Mode> modes_;
};

struct SpaceTimePoint {
    double t;
    double s0;
    double s1;
};

/// Probe points used when none are given; cylindrical probes keep r > 0.
std::vector<SpaceTimePoint> default_scale_probes(Coordinates coords);

/// Outcome of comparing R[D_λψ](p) against λ^{w+1} R[ψ](λp), where
/// (D_λψ)(t, p) = λ^w ψ(λt, λp) and w is the field's scaling weight
/// (1 for Cartesian ψ, 1/2 for cylindrical φ; θ is not dilated).
struct ScaleCheckReport {
    EquationId model;
    double lambda;
    double field_weight;
    double mass;
    bool conformal_model;         ///< every coupling preserves the scaling degree
    double max_mismatch;          ///< max over probes of |R[D_λψ] − λ^{w+1} R[ψ]∘scale|
    double mass_prediction;       ///< max of |m(λ^{w+1} − λ^w) σ₃ψ|
    double cubic_prediction;      ///< eq9 only: max of |(λ² − λ³) N(ψ)ψ|
    double unexplained;           ///< max of |mismatch − mass part − cubic part|
    std::size_t probe_count;
};

inline constexpr double scale_tolerance = 1e-10;

ScaleCheckReport scale_check(const ModelSpec& spec, double lambda,
                             std::span<const SpaceTimePoint> probes,
                             const AnalyticTestField& field = AnalyticTestField::standard());

ScaleCheckReport scale_check(const ModelSpec& spec, double lambda);

}  // namespace nldirac
