#pragma once

// §-style explicit counterexample: σ(t) = 2cos(ω ln t)/t^γ on [1,∞) with
// γ < 1/4, whose transform φ(z) = ∫_1^∞ σ(t) t^(-z) dt has the closed form
// 2(z+γ-1)/(ω² + (1-z-γ)²) with poles 1-γ ± iω.  The exact Taylor data here
// is the ground truth that calibrates estimate_radius.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <thetazeta/precision.hpp>
#include <thetazeta/quadrature.hpp>
#include <thetazeta/theta.hpp>

namespace thetazeta {

struct CounterexampleSpec {
    double gamma = 0.2;      // damping exponent, must stay below 1/4
    double frequency = 12.0; // printed value; kept configurable

    void validate() const {
        if (!std::isfinite(gamma) || !(gamma < 0.25))
            throw ConfigError("CounterexampleSpec: gamma must be finite and < 1/4");
        if (!std::isfinite(frequency) || !(frequency > 0.0))
            throw ConfigError("CounterexampleSpec: frequency must be finite and positive");
    }

    // 1-γ ± iω, symmetric about the real axis
    std::array<std::complex<double>, 2> pole_pair() const {
        return {std::complex<double>(1.0 - gamma, frequency),
                std::complex<double>(1.0 - gamma, -frequency)};
    }
};

inline double ce_sigma(double t, const CounterexampleSpec& spec) {
    spec.validate();
    if (!(t >= 1.0)) throw DomainError("ce_sigma: defined on t >= 1");
    return 2.0 * std::cos(spec.frequency * std::log(t)) * std::pow(t, -spec.gamma);
}

// φ(z) = 2s/(s² + ω²) with s = z + γ - 1; equivalently 1/(z-p₊) + 1/(z-p₋).
template <class R>
Cplx<R> ce_phi_closed(const Cplx<R>& z, const CounterexampleSpec& spec) {
    spec.validate();
    using C = Cplx<R>;
    const auto zd = num::to_cdouble<R>(z);
    for (const auto& p : spec.pole_pair())
        if (std::abs(zd - p) < 1e-9)
            throw PoleError("ce_phi_closed: z within 1e-9 of a pole 1 - gamma +/- i*frequency");
    const C s = z + C(R(spec.gamma) - R(1));
    const R omega = R(spec.frequency);
    return R(2) * s / (s * s + omega * omega);
}

// Quadrature of ∫_0^∞ 2cos(ωτ)e^(-sτ) dτ, s = z + γ - 1, panels split at the
// zeros of the cosine ((2k+1)π/(2ω)) so each contribution is single-signed.
// Integration stops once the geometric tail 2e^(-qτ)/q (q = Re s) clears the
// working tolerance; T, when positive, caps τ itself — a t-space cap would
// overflow e^τ long before small q lets the tail die.
template <class R>
QuadratureResult<R> ce_phi_numeric(const Cplx<R>& z, const CounterexampleSpec& spec,
                                   const PrecisionConfig& cfg = {}, double T = 0.0) {
    spec.validate();
    cfg.validate();
    using C = Cplx<R>;
    using std::cos;
    using std::exp;
    const C s = z + C(R(spec.gamma) - R(1));
    const double q = num::to_cdouble<R>(s).real();
    if (!(q > 0.0))
        throw DomainError("ce_phi_numeric: integral diverges unless Re z > 1 - gamma");

    const double tol = 0.01 * std::min(cfg.abs_tol, std::pow(10.0, -cfg.digits));
    double tau_end = std::log(2.0 / (q * tol)) / q;
    if (T > 0.0 && tau_end > T) tau_end = T;

    const R omega = R(spec.frequency);
    const R quarter = num::pi<R>() / (2 * omega);
    const R tend = R(tau_end);
    const int m = detail::gl_order<R>();
    const auto f = [&](const R& tau) { return C(2 * cos(omega * tau)) * exp(-s * tau); };

    C total(0);
    double comp_err = 0.0;
    long n_panels = 0;
    for (long i = 0;; ++i) {
        R a = quarter * i, b = quarter * (i + 1);
        if (a >= tend) break;
        if (b > tend) b = tend;
        const C fine = detail::gl_panel(f, a, b, m);
        const C half = detail::gl_panel(f, a, b, m / 2);
        total += fine;
        comp_err += num::to_double<R>(num::cabs(fine - half));
        ++n_panels;
    }

    QuadratureResult<R> out;
    out.value = total;
    const double tail = 2.0 * std::exp(-q * tau_end) / q;
    out.error_bound = comp_err + tail +
                      16.0 * num::to_double<R>(num::eps<R>()) * static_cast<double>(n_panels) *
                          (num::to_double<R>(num::cabs(total)) + 1.0);
    out.truncation_T = tau_end;
    out.tail_model = "geometric: |tail| <= 2 e^(-q tau)/q beyond tau_end, q = Re z + gamma - 1";
    return out;
}

// Exact Taylor data at a: c_n = (-1)^n [(a-p₊)^-(n+1) + (a-p₋)^-(n+1)] via the
// 1/(z-p) derivative recurrence.  Error bounds are rounding-level; truncation_T
// is infinite (nothing was truncated).
template <class R>
TaylorExpansion<R> ce_taylor_expansion(const Cplx<R>& a, int N, const CounterexampleSpec& spec) {
    spec.validate();
    if (N < 0 || N > 128) throw ConfigError("ce_taylor_expansion: N must lie in [0, 128]");
    using C = Cplx<R>;
    const auto ad = num::to_cdouble<R>(a);
    for (const auto& p : spec.pole_pair())
        if (std::abs(ad - p) < 1e-9)
            throw PoleError("ce_taylor_expansion: center within 1e-9 of a pole");
    const C pp(R(1) - R(spec.gamma), R(spec.frequency));
    const C pm(R(1) - R(spec.gamma), -R(spec.frequency));
    const C up = C(R(1)) / (a - pp), um = C(R(1)) / (a - pm);

    TaylorExpansion<R> out;
    out.center = a;
    out.requested_N = N;
    out.truncation_T = std::numeric_limits<double>::infinity();
    C wp = up, wm = um;  // (-1)^n u^(n+1)
    for (int n = 0; n <= N; ++n) {
        out.coefficients.push_back(wp + wm);
        out.coeff_error_bounds.push_back(
            static_cast<double>(n + 2) * num::to_double<R>(num::eps<R>()) *
            num::to_double<R>(num::cabs(wp) + num::cabs(wm)));
        wp *= -up;
        wm *= -um;
    }
    out.N = N;
    return out;
}

// Ground-truth radius of convergence at a: distance to the nearest pole.
template <class R>
double ce_expansion_ground_truth(const Cplx<R>& a, const CounterexampleSpec& spec) {
    spec.validate();
    const auto ad = num::to_cdouble<R>(a);
    const auto ps = spec.pole_pair();
    return std::min(std::abs(ad - ps[0]), std::abs(ad - ps[1]));
}

}  // namespace thetazeta
