#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "thetazeta/errors.hpp"
#include "thetazeta/precision.hpp"
#include "thetazeta/quadrature.hpp"

namespace thetazeta {

enum class ZetaMethod { dirichlet_em, integral_repr };

inline std::string zeta_method_name(ZetaMethod m) {
    return m == ZetaMethod::dirichlet_em ? "dirichlet_em" : "integral_repr";
}

template <class R>
struct ZetaEvaluation {
    Cplx<R> z{};
    Cplx<R> value{};
    ZetaMethod method = ZetaMethod::dirichlet_em;
    double error_bound = 0.0;
};

template <class R>
struct LogDerivDecomposition {
    Cplx<R> z{};
    Cplx<R> pole_part{};  // -1/(z-1)
    Cplx<R> F_value{};    // psi'(z) / ((z-1) zeta(z))
    Cplx<R> psi_value{};  // (z-1)[1/2 + z integral]
};

namespace detail {

// B_2 .. B_34 as exact rationals; B_{2(q+1)} backs the remainder bound.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 17> kBernoulli2j = {{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029LL, 870},
    {8615841276005LL, 14322},
    {-7709321041217LL, 510},
    {2577687858367LL, 6},
}};

// One Euler–Maclaurin evaluation at cutoff K, order q.  Fills value and a
// rigorous remainder bound; optionally the term-differentiated derivative.
template <class R>
void zeta_em_at(const Cplx<R>& z, int K, int q, Cplx<R>& value, double& bound, Cplx<R>* deriv,
                double* deriv_bound) {
    using C = Cplx<R>;
    using std::exp;
    using std::log;
    detail::AccumulatorFor<R> head, dhead;
    for (int k = 1; k < K; ++k) {
        const R lk = log(R(k));
        const C pk = exp(-z * lk);
        head.add(pk);
        if (deriv) dhead.add(-lk * pk);
    }
    const R lnK = log(R(K));
    const C Kmz = exp(-z * lnK);          // K^{-z}
    const C zm1 = z - R(1);
    const C tail0 = Kmz * R(K) / zm1;     // K^{1-z}/(z-1)
    value = head.s + tail0 + Kmz / R(2);
    C dvalue = deriv ? dhead.s - lnK * tail0 - tail0 / zm1 - lnK * Kmz / R(2) : C(0);

    // Correction terms: B_2j/(2j)! · z(z+1)···(z+2j-2) · K^{-z-2j+1}
    C poch(1);            // rising factorial, updated two factors per step
    C dpoch_sum(0);       // Σ 1/(z+i), so poch' = poch · dpoch_sum
    R fact(1);            // (2j)!
    C kpow = Kmz * R(K);  // K^{-z-2j+1}, starts at K^{1-z}
    const R K2 = R(K) * R(K);
    int pfac = 0;  // factors absorbed into poch so far
    for (int j = 1; j <= q; ++j) {
        while (pfac < 2 * j - 1) {
            poch *= z + R(pfac);
            dpoch_sum += C(1) / (z + R(pfac));
            ++pfac;
        }
        fact *= R(2 * j - 1) * R(2 * j);
        kpow /= K2;
        const auto& [bn, bd] = kBernoulli2j[j - 1];
        const C coef = C(R(bn) / (R(bd) * fact));
        const C term = coef * poch * kpow;
        value += term;
        if (deriv) dvalue += coef * kpow * (poch * dpoch_sum - poch * lnK);
    }
    // Remainder ≤ |z+2q+1|/(Re z+2q+1) × |first omitted term|
    C poch_next = poch;
    C dpoch_next = dpoch_sum;
    while (pfac < 2 * q + 1) {
        poch_next *= z + R(pfac);
        dpoch_next += C(1) / (z + R(pfac));
        ++pfac;
    }
    const R fact_next = fact * R(2 * q + 1) * R(2 * q + 2);
    const auto& [bn, bd] = kBernoulli2j[q];
    const C next = C(R(bn) / (R(bd) * fact_next)) * poch_next * (kpow / K2);
    const double factor = num::to_double<R>(num::cabs(z + R(2 * q + 1))) /
                          (num::to_double<R>(z.real()) + 2 * q + 1);
    bound = factor * num::to_double<R>(num::cabs(next)) +
            4 * num::to_double<R>(num::eps<R>()) * (K + num::to_double<R>(num::cabs(value)));
    if (deriv) {
        *deriv = dvalue;
        *deriv_bound =
            factor * num::to_double<R>(num::cabs(next)) *
                (num::to_double<R>(lnK) + num::to_double<R>(num::cabs(dpoch_next)) + 1.0) +
            4 * num::to_double<R>(num::eps<R>()) * K *
                (1.0 + num::to_double<R>(num::cabs(dvalue)));
    }
}

template <class R>
void zeta_em_adaptive(const Cplx<R>& z, const PrecisionConfig& cfg, Cplx<R>& value, double& bound,
                      Cplx<R>* deriv, double* deriv_bound) {
    const int q = cfg.digits > kDoubleTierMax ? 16 : 10;
    int K = static_cast<int>(std::ceil(std::abs(num::to_double<R>(z.imag())))) + 20;
    const double target = std::min(cfg.abs_tol, std::pow(10.0, -(cfg.digits - 2)));
    for (int attempt = 0;; ++attempt) {
        zeta_em_at<R>(z, K, q, value, bound, deriv, deriv_bound);
        if (bound <= target || attempt >= 3) break;
        K *= 2;
    }
}

}  // namespace detail

template <class R>
ZetaEvaluation<R> zeta(const Cplx<R>& z, const PrecisionConfig& cfg = {},
                       ZetaMethod method = ZetaMethod::dirichlet_em) {
    cfg.validate();
    using C = Cplx<R>;
    if (z == C(1)) throw PoleError("zeta: z = 1 is the pole");
    if (!(z.real() > R(0)))
        throw DomainError("zeta: requires Re z > 0 (functional equation not implemented)");

    ZetaEvaluation<R> out;
    out.z = z;
    out.method = method;
    if (method == ZetaMethod::dirichlet_em) {
        detail::zeta_em_adaptive<R>(z, cfg, out.value, out.error_bound, nullptr, nullptr);
        return out;
    }
    // Eq.(3)-style: 1/(z-1) + 1/2 + z ∫_1^T (1/2 - {t}) t^{-z-1} dt  (+ tail bound)
    const double T = cfg.integral_repr_T;
    SmoothParams<R> params;
    const auto q =
        integrate_smooth_weighted<R>(SmoothKernel::fractional_part_kernel, params, z, 0, T, cfg);
    out.value = C(1) / (z - R(1)) + R(1) / 2 + z * q.value;
    const double az = num::to_double<R>(num::cabs(z));
    const double sigma = num::to_double<R>(z.real());
    const double rho_tail = num::to_double<R>(num::cabs(z + R(1))) / (4.0 * (sigma + 1.0)) *
                            std::pow(T - 1.0, -(sigma + 1.0));
    out.error_bound = az * (q.error_bound + rho_tail) +
                      4 * num::to_double<R>(num::eps<R>()) *
                          (1.0 + num::to_double<R>(num::cabs(out.value)));
    return out;
}

template <class R>
Cplx<R> zeta_derivative(const Cplx<R>& z, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    using C = Cplx<R>;
    if (z == C(1)) throw PoleError("zeta_derivative: z = 1 is the pole");
    if (!(z.real() > R(0))) throw DomainError("zeta_derivative: requires Re z > 0");
    C value, deriv;
    double bound = 0, dbound = 0;
    detail::zeta_em_adaptive<R>(z, cfg, value, bound, &deriv, &dbound);
    return deriv;
}

template <class R>
LogDerivDecomposition<R> log_deriv_decomposition(const Cplx<R>& z, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    using C = Cplx<R>;
    if (z == C(1)) throw PoleError("log_deriv_decomposition: z = 1 is the pole");
    if (!(z.real() > R(0.5)))
        throw DomainError("log_deriv_decomposition: requires Re z > 1/2");
    using std::abs;
    if (!(abs(z.imag()) < 4 * num::pi<R>()))
        throw DomainError("log_deriv_decomposition: requires |Im z| < 4*pi");

    const auto zeval = zeta<R>(z, cfg);
    if (num::to_double<R>(num::cabs(zeval.value)) < 1e-6)
        throw NearZeroError("log_deriv_decomposition: |zeta(z)| < 1e-6, ill-conditioned");

    const auto psi = [&](const C& w) -> C {
        SmoothParams<R> params;
        const auto q = integrate_smooth_weighted<R>(SmoothKernel::fractional_part_kernel, params,
                                                    w, 0, cfg.integral_repr_T, cfg);
        return (w - R(1)) * (R(1) / 2 + w * q.value);
    };

    LogDerivDecomposition<R> out;
    out.z = z;
    out.pole_part = C(-1) / (z - R(1));
    out.psi_value = psi(z);
    const R h = num::from_string<R>("1e-" + std::to_string((cfg.digits + 2) / 3));
    const C psi_deriv = (psi(z + C(h)) - psi(z - C(h))) / (2 * h);
    out.F_value = psi_deriv / ((z - R(1)) * zeval.value);
    return out;
}

template <class R>
R refine_zero(const R& y0, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    using C = Cplx<R>;
    const auto g = [&](const R& y) -> R {
        const auto ev = zeta<R>(C(R(1) / 2, y), cfg);
        using std::norm;
        return norm(ev.value);
    };
    R a = y0 - R(1) / 2, b = y0 + R(1) / 2;
    const R invphi = (num::from_string<R>("2.2360679774997896964091736687747") - 1) / 2;
    R x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    R f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 200 && num::to_double<R>(b - a) > 1e-9; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g(x2);
        }
    }
    const R y = (a + b) / 2;
    using std::sqrt;
    if (!(sqrt(g(y)) < R(1) / 1000))
        throw NotAZeroError("refine_zero: no |zeta| < 1e-3 minimum within 0.5 of y0");
    return y;
}

}  // namespace thetazeta
