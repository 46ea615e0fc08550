#include "nldirac/scaling.hpp"

#include "nldirac/error.hpp"

#include <algorithm>
#include <cmath>

namespace nldirac {

AnalyticTestField AnalyticTestField::standard() {
    return AnalyticTestField({
        {{0.9, 0.2}, {0.3, -0.4}, 0.2, -0.1, 1.3, 0.7, -0.4, 1.1},
        {{-0.25, 0.5}, {0.6, 0.15}, -0.4, 0.5, 0.9, -1.2, 0.8, -0.6},
    });
}

AnalyticTestField::Sample AnalyticTestField::at(double t, double s0, double s1) const {
    Sample out{};
    for (const Mode& m : modes_) {
        const double d0 = s0 - m.center0;
        const double d1 = s1 - m.center1;
        const double w2 = m.width * m.width;
        const Complex g = std::exp(Complex(-(d0 * d0 + d1 * d1) / w2, m.q0 * s0 + m.q1 * s1 - m.omega * t));
        const Complex g0 = g * Complex(-2.0 * d0 / w2, m.q0);
        const Complex g1 = g * Complex(-2.0 * d1 / w2, m.q1);
        const Complex gt = g * Complex(0.0, -m.omega);
        out.value += Spinor{m.amp_plus * g, m.amp_minus * g};
        out.d0 += Spinor{m.amp_plus * g0, m.amp_minus * g0};
        out.d1 += Spinor{m.amp_plus * g1, m.amp_minus * g1};
        out.dt += Spinor{m.amp_plus * gt, m.amp_minus * gt};
    }
    return out;
}

std::vector<SpaceTimePoint> default_scale_probes(Coordinates coords) {
    if (coords == Coordinates::cylindrical) {
        return {{0.1, 0.45, 0.3}, {0.0, 0.8, 1.9}, {0.6, 1.2, 4.0}, {0.3, 0.6, 5.5}, {0.45, 1.5, 2.7}};
    }
    return {{0.1, 0.3, -0.2}, {0.0, -0.5, 0.4}, {0.7, 1.1, 0.9}, {0.25, -1.3, -0.6}, {0.5, 0.05, 1.5}};
}

namespace {

Spinor sigma3(const Spinor& s) { return {s.plus, -s.minus}; }

}  // namespace

ScaleCheckReport scale_check(const ModelSpec& spec, double lambda, std::span<const SpaceTimePoint> probes,
                             const AnalyticTestField& field) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ContractViolation("λ must be a positive real");
    if (probes.empty()) throw ContractViolation("scale check needs at least one probe");

    const bool cyl = spec.coordinates() == Coordinates::cylindrical;
    const double w = cyl ? 0.5 : 1.0;
    const double lw = std::pow(lambda, w);
    const double lw1 = std::pow(lambda, w + 1.0);
    // θ is an angle and is not dilated.
    const double l_second = cyl ? 1.0 : lambda;

    ScaleCheckReport rep{spec.equation(), lambda, w, spec.mass(), spec.equation() != EquationId::eq9,
                         0.0, 0.0, 0.0, 0.0, probes.size()};

    for (const SpaceTimePoint& p : probes) {
        const double ts = lambda * p.t;
        const double s0s = lambda * p.s0;
        const double s1s = l_second * p.s1;
        const AnalyticTestField::Sample base = field.at(ts, s0s, s1s);

        // ψ and its exact partials at the dilated point.
        const PointJet jet_base{base.value, base.d0, base.d1, s0s};
        const Spinor r_base = pointwise_residual(spec, jet_base, base.dt);

        // D_λψ and its partials at p, by the chain rule.
        const PointJet jet_scaled{lw * base.value, lw1 * base.d0, lw * l_second * base.d1, p.s0};
        const Spinor r_scaled = pointwise_residual(spec, jet_scaled, lw1 * base.dt);

        const Spinor mismatch = r_scaled - lw1 * r_base;
        const Spinor mass_part = (spec.mass() * (lw1 - lw)) * sigma3(base.value);
        Spinor cubic_part{};
        if (spec.equation() == EquationId::eq9) {
            cubic_part = (lambda * lambda - lambda * lambda * lambda) *
                         (nonlinear_matrix(spec, base.value, s0s) * base.value);
        }
        rep.max_mismatch = std::max(rep.max_mismatch, mismatch.max_abs());
        rep.mass_prediction = std::max(rep.mass_prediction, mass_part.max_abs());
        rep.cubic_prediction = std::max(rep.cubic_prediction, cubic_part.max_abs());
        rep.unexplained = std::max(rep.unexplained, (mismatch - mass_part - cubic_part).max_abs());
    }
    return rep;
}

ScaleCheckReport scale_check(const ModelSpec& spec, double lambda) {
    const auto probes = default_scale_probes(spec.coordinates());
    return scale_check(spec, lambda, probes);
}

}  // namespace nldirac
