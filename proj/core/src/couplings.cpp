#include "nldirac/couplings.hpp"

#include "nldirac/error.hpp"

#include <cmath>
#include <sstream>

namespace nldirac {

std::string_view to_string(RadicandPolicy policy) {
    switch (policy) {
        case RadicandPolicy::signed_sqrt: return "signed-sqrt";
        case RadicandPolicy::clamp_to_zero: return "clamp-to-zero";
        case RadicandPolicy::error_on_negative: return "error-on-negative";
    }
    return "unknown";
}

namespace {

double real_part_checked(Complex z, double scale, const char* name) {
    if (std::abs(z.imag()) > radicand_imag_tolerance * std::max(scale, 1e-300) &&
        std::abs(z.imag()) > 0.0) {
        std::ostringstream msg;
        msg << "imaginary residue " << z.imag() << " in the " << name << " radicand";
        throw Error(msg.str());
    }
    return z.real();
}

}  // namespace

Radicands radicands(const Spinor& psi) {
    const Complex a = psi.plus;
    const Complex b = psi.minus;
    const double pp = std::norm(a);
    const double mm = std::norm(b);
    const double scale = 2.0 * std::abs(a) * std::abs(b);

    const Complex u = I * (std::conj(a) * b - a * std::conj(b));
    const Complex w = std::conj(a) * b + a * std::conj(b);
    return {pp - mm, pp + mm, real_part_checked(u, scale, "Ũ"), real_part_checked(w, scale, "W̃")};
}

double policy_root(double radicand, RadicandPolicy policy, std::size_t index) {
    if (radicand >= 0.0) return std::sqrt(radicand);
    switch (policy) {
        case RadicandPolicy::signed_sqrt: return -std::sqrt(-radicand);
        case RadicandPolicy::clamp_to_zero: return 0.0;
        case RadicandPolicy::error_on_negative: {
            std::ostringstream msg;
            msg << "negative radicand " << radicand << " at grid index " << index;
            throw RadicandError(msg.str(), index, radicand);
        }
    }
    return 0.0;
}

CouplingValues couplings_at(const Spinor& psi, RadicandPolicy policy, std::size_t index) {
    const Radicands r = radicands(psi);
    return {policy_root(r.scalar, policy, index), std::sqrt(r.vector0),
            policy_root(r.vector1, policy, index), policy_root(r.vector2, policy, index)};
}

template <Frame F>
CouplingFields compute_couplings(const SpinorField<F>& state, RadicandPolicy policy) {
    const std::size_t n = state.size();
    CouplingFields out{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                       std::vector<double>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const CouplingValues c = couplings_at(state.at(k), policy, k);
        out.s_tilde[k] = c.s_tilde;
        out.v_tilde[k] = c.v_tilde;
        out.u_tilde[k] = c.u_tilde;
        out.w_tilde[k] = c.w_tilde;
    }
    return out;
}

template CouplingFields compute_couplings(const SpinorField<Frame::psi>&, RadicandPolicy);
template CouplingFields compute_couplings(const SpinorField<Frame::phi>&, RadicandPolicy);

}  // namespace nldirac
