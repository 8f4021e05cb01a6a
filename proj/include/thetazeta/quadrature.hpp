#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "thetazeta/errors.hpp"
#include "thetazeta/precision.hpp"
#include "thetazeta/prime_table.hpp"

namespace thetazeta {

template <class R>
struct QuadratureResult {
    Cplx<R> value{};
    double error_bound = 0.0;  // absolute; covers what tail_model says it covers
    double truncation_T = 0.0;
    std::string tail_model = "none";
};

namespace detail {

// Compensated summation; only worth the extra flops in the double tier.
template <class C>
struct KahanSum {
    C s{}, c{};
    void add(const C& x) {
        const C y = x - c;
        const C t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

template <class C>
struct PlainSum {
    C s{};
    void add(const C& x) { s += x; }
};

template <class R>
using AccumulatorFor =
    std::conditional_t<std::is_same_v<R, double>, KahanSum<Cplx<R>>, PlainSum<Cplx<R>>>;

// exp(w) - 1 without cancellation for small |w|.
template <class C>
C complex_expm1(const C& w) {
    using RR = decltype(num::cabs(w));
    if (num::cabs(w) > RR(0.5)) {
        using std::exp;
        return exp(w) - C(1);
    }
    C term = w, sum = w;
    const RR tol = std::numeric_limits<RR>::epsilon();
    for (int k = 2; k < 200; ++k) {
        term *= w / RR(k);
        sum += term;
        if (num::cabs(term) <= num::cabs(sum) * tol) break;
    }
    return sum;
}

// Moments M_k = ∫_{u1}^{u2} u^k e^{-s u} du for k = 0..n, written into out[0..n].
// Exact finite formulas: upward recurrence for generic s, power series in s when
// |s|·max(u2,1) is small (the recurrence numerator cancels there).
template <class R, class C>
void exp_poly_moments(const C& s, const R& u1, const R& u2, int n, C* out) {
    const double s_scale =
        num::to_double<R>(num::cabs(s)) * std::max(1.0, num::to_double<R>(u2));
    if (s_scale < 0.25) {
        // M_k = Σ_m (-s)^m / m! · (u2^{k+m+1} - u1^{k+m+1}) / (k+m+1)
        const R tol = num::eps<R>();
        for (int k = 0; k <= n; ++k) {
            C coef(1), sum(0);
            R q1 = R(1), q2 = R(1);
            for (int j = 0; j < k; ++j) {
                q1 *= u1;
                q2 *= u2;
            }
            for (int m = 0; m <= 200; ++m) {
                q1 *= u1;
                q2 *= u2;  // now u^{k+m+1}
                const C term = coef * (q2 - q1) / R(k + m + 1);
                sum += term;
                if (m > 2 && num::cabs(term) <= num::cabs(sum) * tol) break;
                coef *= -s / R(m + 1);
            }
            out[k] = sum;
        }
        return;
    }
    using std::exp;
    const C e1 = exp(-s * u1), e2 = exp(-s * u2);
    // M_0 via an expm1-style series to stay accurate when u2-u1 is tiny.
    const C w = -s * (u2 - u1);
    out[0] = num::cabs(w) > R(0.5) ? (e1 - e2) / s : e1 * complex_expm1(w) / (-s);
    R q1 = R(1), q2 = R(1);
    for (int k = 1; k <= n; ++k) {
        q1 *= u1;
        q2 *= u2;
        out[k] = (q1 * e1 - q2 * e2 + R(k) * out[k - 1]) / s;
    }
}

// Same ladder but with e^{-s*u1} precomputed by the caller (hot path over primes).
template <class R, class C>
void exp_poly_moments_pre(const C& s, const R& u1, const C& e1, const R* u2pow, const C& e2,
                          int n, C* out) {
    const C w = -s * (u2pow[1] - u1);
    out[0] = num::cabs(w) > R(0.5) ? (e1 - e2) / s : e1 * complex_expm1(w) / (-s);
    R q1 = R(1);
    for (int k = 1; k <= n; ++k) {
        q1 *= u1;
        out[k] = (q1 * e1 - u2pow[k] * e2 + R(k) * out[k - 1]) / s;
    }
}

// Gauss–Legendre nodes/weights on [-1, 1], computed once per (tier, m) by
// Newton iteration on P_m and cached.
template <class R>
struct GLRule {
    std::vector<R> x, w;
};

template <class R>
const GLRule<R>& gl_rule(int m) {
    static std::map<int, GLRule<R>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    GLRule<R> rule;
    rule.x.resize(m);
    rule.w.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        R x = R(std::cos(M_PI * (i + 0.75) / (m + 0.5)));
        R pm = 0, dpm = 0;
        for (int iter = 0; iter < 60; ++iter) {
            R p0 = R(1), p1 = x;
            for (int k = 2; k <= m; ++k) {
                const R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / R(k);
                p0 = p1;
                p1 = p2;
            }
            pm = p1;
            dpm = R(m) * (x * p1 - p0) / (x * x - 1);
            const R dx = pm / dpm;
            x -= dx;
            using std::abs;
            if (abs(dx) < num::eps<R>() * 4) break;
        }
        rule.x[i] = -x;
        rule.x[m - 1 - i] = x;
        const R w = R(2) / ((R(1) - x * x) * dpm * dpm);
        rule.w[i] = w;
        rule.w[m - 1 - i] = w;
    }
    return cache.emplace(m, std::move(rule)).first->second;
}

template <class R>
int gl_order() {
    return std::is_same_v<R, double> ? 20 : 40;
}

// ∫_a^b f(u) du by a single GL panel of order m.
template <class R, class F>
auto gl_panel(const F& f, const R& a, const R& b, int m) {
    const auto& rule = gl_rule<R>(m);
    const R mid = (a + b) / 2, half = (b - a) / 2;
    decltype(f(a)) acc(0);
    for (int i = 0; i < m; ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    return acc * half;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Li(t) = ∫_2^t ds/ln s, evaluated in u = ln t coordinates (∫ e^u/u du).
// ---------------------------------------------------------------------------

template <class R>
R li_offset(const R& t, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    if (!(t >= R(2))) throw DomainError("li_offset: t must be >= 2");
    if (t == R(2)) return R(0);
    using std::log;
    const R lo = num::ln_two<R>(), hi = log(t);
    const auto f = [](const R& u) {
        using std::exp;
        return exp(u) / u;
    };
    const int m = detail::gl_order<R>();
    double panel_len = 0.5;
    R fine(0), coarse(0);
    for (int round = 0; round < 8; ++round) {
        const int n_f = std::max(1, (int)std::ceil(num::to_double<R>(hi - lo) / panel_len));
        const int n_c = std::max(1, (int)std::ceil(num::to_double<R>(hi - lo) / (2 * panel_len)));
        fine = R(0);
        coarse = R(0);
        for (int i = 0; i < n_f; ++i)
            fine += detail::gl_panel(f, lo + (hi - lo) * i / n_f, lo + (hi - lo) * (i + 1) / n_f, m);
        for (int i = 0; i < n_c; ++i)
            coarse +=
                detail::gl_panel(f, lo + (hi - lo) * i / n_c, lo + (hi - lo) * (i + 1) / n_c, m);
        using std::abs;
        if (num::to_double<R>(abs(fine - coarse)) <= 0.25 * cfg.abs_tol) return fine;
        panel_len /= 2;
    }
    return fine;
}

// ---------------------------------------------------------------------------
// E1(w), Re w > 0: power series near 0, modified-Lentz continued fraction
// farther out.  Series radius grows with the working precision since the
// continued fraction converges slowly for small |w|.
// ---------------------------------------------------------------------------

template <class R>
Cplx<R> exp_integral_e1(const Cplx<R>& w, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    using C = Cplx<R>;
    if (!(w.real() > R(0))) throw DomainError("exp_integral_e1: requires Re w > 0");
    const double aw = num::to_double<R>(num::cabs(w));
    const int digits = std::numeric_limits<R>::digits10;
    const double series_radius = std::max(4.0, 0.4 * digits);
    const R tiny_eps = num::eps<R>();

    if (aw <= series_radius) {
        // E1(w) = -γ - ln w + Σ_{k≥1} (-1)^{k+1} w^k / (k·k!)
        using std::log;
        C term(1), sum(0);
        for (int k = 1; k < 4000; ++k) {
            term *= -w / R(k);
            const C add = -term / R(k);
            sum += add;
            if (num::cabs(add) <= num::cabs(sum) * tiny_eps && k > 3) break;
        }
        return -num::euler_gamma<R>() - log(w) + sum;
    }

    // Modified Lentz on E1(w) = e^{-w} / (w + 1 - 1/(w+3 - 4/(w+5 - 9/(...))))
    const R huge = R(1) / (tiny_eps * tiny_eps);
    C b = w + R(1);
    C c_ = huge, d = C(1) / b, h = d;
    for (int k = 1; k < 20000; ++k) {
        const C a = C(R(-static_cast<double>(k) * k));
        b = b + R(2);
        d = b + a * d;
        if (num::cabs(d) == R(0)) d = C(tiny_eps);
        c_ = b + a / c_;
        if (num::cabs(c_) == R(0)) c_ = C(tiny_eps);
        d = C(1) / d;
        const C delta = c_ * d;
        h *= delta;
        if (num::cabs(delta - C(1)) <= tiny_eps * 4) break;
    }
    using std::exp;
    return exp(-w) * h;
}

// ---------------------------------------------------------------------------
// ∫_2^T π(t) · ln^n t · t^(-z-1) dt, exact: Σ_{p≤T} ∫_{ln p}^{ln T} u^n e^{-zu} du.
// Ladder variant returns all orders 0..n in one pass over the primes.
// ---------------------------------------------------------------------------

template <class R>
std::vector<QuadratureResult<R>> integrate_step_weighted_ladder(const PrimeTable& table,
                                                                const Cplx<R>& z, int n, double T,
                                                                const PrecisionConfig& cfg = {}) {
    cfg.validate();
    using C = Cplx<R>;
    if (n < 0) throw DomainError("integrate_step_weighted: n must be >= 0");
    if (n > cfg.n_max)
        throw ConfigError("integrate_step_weighted: n exceeds n_max=" + std::to_string(cfg.n_max));
    if (!(z.real() > R(0))) throw DomainError("integrate_step_weighted: requires Re z > 0");
    if (T > static_cast<double>(table.limit))
        throw DomainError("integrate_step_weighted: T exceeds table limit");

    std::vector<QuadratureResult<R>> out(n + 1);
    if (T < 2.0) {
        for (auto& q : out) {
            q.truncation_T = 2.0;
            q.tail_model = "none (empty range)";
        }
        return out;
    }

    using std::exp;
    using std::log;
    const R lnT = log(R(T));
    const C e2 = exp(-z * lnT);
    std::vector<R> u2pow(std::max(n + 1, 2));
    u2pow[0] = R(1);
    for (int k = 1; k <= std::max(n, 1); ++k) u2pow[k] = u2pow[k - 1] * lnT;

    std::vector<detail::AccumulatorFor<R>> acc(n + 1);
    std::vector<C> piece(n + 1);
    double abs_e1_sum = 0.0;
    std::uint64_t count = 0;
    const bool small_s = num::to_double<R>(num::cabs(z)) * std::max(num::to_double<R>(lnT), 1.0) < 0.25;
    for (const auto p : table.primes) {
        if (static_cast<double>(p) > T) break;
        const R u1 = log(R(p));
        if (small_s) {
            detail::exp_poly_moments(C(z), u1, lnT, n, piece.data());
        } else {
            const C e1 = exp(-z * u1);
            abs_e1_sum += num::to_double<R>(num::cabs(e1));
            detail::exp_poly_moments_pre(C(z), u1, e1, u2pow.data(), e2, n, piece.data());
        }
        for (int k = 0; k <= n; ++k) acc[k].add(piece[k]);
        ++count;
    }

    const double eps_d = num::to_double<R>(num::eps<R>());
    const double az = num::to_double<R>(num::cabs(z));
    const double scale0 =
        abs_e1_sum + static_cast<double>(count) * num::to_double<R>(num::cabs(e2)) + 1.0;
    const double u2d = std::max(1.0, num::to_double<R>(lnT));
    double upow = 1.0;
    for (int k = 0; k <= n; ++k) {
        out[k].value = acc[k].s;
        out[k].error_bound = 16.0 * eps_d * scale0 * upow / std::max(az, 1e-30) *
                             std::max(1.0, k / std::max(az, 1e-30));
        out[k].truncation_T = T;
        out[k].tail_model = "none (exact step integral on [2,T]; rounding only)";
        upow *= u2d;
    }
    return out;
}

template <class R>
QuadratureResult<R> integrate_step_weighted(const PrimeTable& table, const Cplx<R>& z, int n,
                                            double T, const PrecisionConfig& cfg = {}) {
    return integrate_step_weighted_ladder<R>(table, z, n, T, cfg).back();
}

// ---------------------------------------------------------------------------
// Smooth kernels.
// ---------------------------------------------------------------------------

enum class SmoothKernel { li, sigma_counterexample, fractional_part_kernel };

inline SmoothKernel parse_kernel(const std::string& s) {
    if (s == "Li" || s == "li") return SmoothKernel::li;
    if (s == "sigma_counterexample" || s == "sigma") return SmoothKernel::sigma_counterexample;
    if (s == "fractional_part_kernel" || s == "fractional_part" || s == "rho")
        return SmoothKernel::fractional_part_kernel;
    throw ConfigError("unknown smooth kernel '" + s + "'");
}

inline std::string kernel_name(SmoothKernel k) {
    switch (k) {
        case SmoothKernel::li: return "Li";
        case SmoothKernel::sigma_counterexample: return "sigma_counterexample";
        default: return "fractional_part_kernel";
    }
}

template <class R>
struct SmoothParams {
    R gamma = R(0);      // sigma kernel: damping exponent, gamma < 1/4 in the paper
    R frequency = R(12); // sigma kernel: cos(frequency·ln t)
};

namespace detail {

// Li-kernel ladder: ∫_2^T Li(t)·ln^n t·t^(-z-1) dt in u = ln t coordinates.
// Li(e^u) accumulates cumulatively along the ascending node sequence, so the
// whole ladder costs one sweep.  Error heuristic: repeat at double panel width.
template <class R>
std::vector<Cplx<R>> li_ladder_pass(const Cplx<R>& z, int n, const R& lo, const R& hi,
                                    double panel_len, int m) {
    using C = Cplx<R>;
    const auto& rule = gl_rule<R>(m);
    const int panels = std::max(1, (int)std::ceil(num::to_double<R>(hi - lo) / panel_len));
    std::vector<C> acc(n + 1, C(0));
    R li_base(0);   // Li at the left edge of the current panel
    R prev_node = lo;
    const auto ef = [](const R& u) {
        using std::exp;
        return exp(u) / u;
    };
    for (int i = 0; i < panels; ++i) {
        const R a = lo + (hi - lo) * i / panels, b = lo + (hi - lo) * (i + 1) / panels;
        const R mid = (a + b) / 2, half = (b - a) / 2;
        for (int j = 0; j < m; ++j) {
            const R u = mid + half * rule.x[j];
            li_base += gl_panel(ef, prev_node, u, m);
            prev_node = u;
            using std::exp;
            const C w = rule.w[j] * half * li_base * exp(-z * u);
            R up(1);
            for (int k = 0; k <= n; ++k) {
                acc[k] += w * up;
                up *= u;
            }
        }
    }
    return acc;
}

}  // namespace detail

template <class R>
std::vector<QuadratureResult<R>> integrate_smooth_weighted_ladder(SmoothKernel kind,
                                                                  const SmoothParams<R>& params,
                                                                  const Cplx<R>& z, int n, double T,
                                                                  const PrecisionConfig& cfg) {
    cfg.validate();
    using C = Cplx<R>;
    if (n < 0) throw DomainError("integrate_smooth_weighted: n must be >= 0");
    if (n > cfg.n_max)
        throw ConfigError("integrate_smooth_weighted: n exceeds n_max=" + std::to_string(cfg.n_max));
    if (!std::isfinite(T)) throw DomainError("integrate_smooth_weighted: T must be finite");
    std::vector<QuadratureResult<R>> out(n + 1);
    using std::exp;
    using std::log;

    if (kind == SmoothKernel::li) {
        if (!(z.real() > R(0))) throw DomainError("Li kernel: requires Re z > 0 for convergence");
        if (T <= 2.0) {
            for (auto& q : out) {
                q.truncation_T = 2.0;
                q.tail_model = "none (empty range)";
            }
            return out;
        }
        const R lo = num::ln_two<R>(), hi = log(R(T));
        const int m = detail::gl_order<R>();
        const auto fine = detail::li_ladder_pass(z, n, lo, hi, 0.5, m);
        const auto coarse = detail::li_ladder_pass(z, n, lo, hi, 1.0, m);
        for (int k = 0; k <= n; ++k) {
            out[k].value = fine[k];
            out[k].error_bound = num::to_double<R>(num::cabs(fine[k] - coarse[k])) +
                                 16.0 * num::to_double<R>(num::eps<R>()) *
                                     (num::to_double<R>(num::cabs(fine[k])) + 1e-300);
            out[k].truncation_T = T;
            out[k].tail_model = "quadrature heuristic (coarse/fine panel difference)";
        }
        return out;
    }

    if (kind == SmoothKernel::sigma_counterexample) {
        // ∫_1^T σ(t)·ln^n t·t^(-z) dt with σ(t) = 2cos(ω ln t)/t^γ; in τ = ln t:
        // ∫_0^{ln T} 2cos(ωτ)·τ^n·e^{-(z+γ-1)τ} dτ.  Panels split at cos zeros.
        const C s = z + params.gamma - R(1);
        if (!(s.real() > R(0)))
            throw DomainError("sigma kernel: requires Re z > 1 - gamma for convergence");
        if (T < 1.0) throw DomainError("sigma kernel: T must be >= 1");
        const R omega = params.frequency;
        const R tau_end = log(R(std::max(T, 1.0)));
        const int m = std::is_same_v<R, double> ? 16 : 32;
        const R quarter = num::pi<R>() / (2 * omega);
        const int panels = (int)std::ceil(num::to_double<R>(tau_end / quarter)) + 1;
        std::vector<C> fine(n + 1, C(0)), coarse(n + 1, C(0));
        for (int pass = 0; pass < 2; ++pass) {
            auto& acc = pass == 0 ? fine : coarse;
            const int mm = pass == 0 ? m : m / 2;
            for (int i = 0; i < panels; ++i) {
                R a = quarter * i, b = quarter * (i + 1);
                if (a >= tau_end) break;
                if (b > tau_end) b = tau_end;
                const auto& rule = detail::gl_rule<R>(mm);
                const R mid = (a + b) / 2, half = (b - a) / 2;
                for (int j = 0; j < mm; ++j) {
                    const R tau = mid + half * rule.x[j];
                    using std::cos;
                    const C w = rule.w[j] * half * 2 * cos(omega * tau) * exp(-s * tau);
                    R tp(1);
                    for (int k = 0; k <= n; ++k) {
                        acc[k] += w * tp;
                        tp *= tau;
                    }
                }
            }
        }
        for (int k = 0; k <= n; ++k) {
            out[k].value = fine[k];
            out[k].error_bound = num::to_double<R>(num::cabs(fine[k] - coarse[k])) +
                                 16.0 * num::to_double<R>(num::eps<R>()) *
                                     num::to_double<R>(num::cabs(fine[k]) + R(1));
            out[k].truncation_T = T;
            out[k].tail_model = "quadrature heuristic (half-order panel difference)";
        }
        return out;
    }

    // fractional_part_kernel: ∫_1^T (1/2 - {t})·ln^n t·t^(-z-1) dt, exact on each
    // [k, k+1): the kernel is (k + 1/2) - t there, so the piece is
    // (k+1/2)·M_n(ln k, ln b; z) - M_n(ln k, ln b; z-1).
    if (!(z.real() > R(0)))
        throw DomainError("fractional_part kernel: requires Re z > 0 for convergence");
    if (T < 1.0) {
        for (auto& q : out) {
            q.truncation_T = 1.0;
            q.tail_model = "none (empty range)";
        }
        return out;
    }
    const C sz = z, sz1 = z - R(1);
    std::vector<detail::AccumulatorFor<R>> acc(n + 1);
    std::vector<C> mz(n + 1), mz1(n + 1);
    double abs_sum = 0.0;
    const auto kmax = static_cast<std::uint64_t>(std::floor(T));
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        const R u1 = log(R(k));
        const R u2 = (k == kmax && static_cast<double>(k + 1) > T) ? log(R(T)) : log(R(k + 1));
        if (!(u2 > u1)) continue;
        detail::exp_poly_moments(sz, u1, u2, n, mz.data());
        detail::exp_poly_moments(sz1, u1, u2, n, mz1.data());
        const R kc = R(k) + R(1) / 2;
        for (int j = 0; j <= n; ++j) {
            const C piece = kc * mz[j] - mz1[j];
            acc[j].add(piece);
        }
        abs_sum += num::to_double<R>(num::cabs(kc * mz[0]) + num::cabs(mz1[0]));
    }
    for (int j = 0; j <= n; ++j) {
        out[j].value = acc[j].s;
        out[j].error_bound =
            16.0 * num::to_double<R>(num::eps<R>()) * (abs_sum + 1.0) *
            std::pow(std::max(1.0, std::log(std::max(T, 2.0))), j);
        out[j].truncation_T = std::max(T, 1.0);
        out[j].tail_model = "none (exact per-interval; truncated at T)";
    }
    return out;
}

template <class R>
QuadratureResult<R> integrate_smooth_weighted(SmoothKernel kind, const SmoothParams<R>& params,
                                              const Cplx<R>& z, int n, double T,
                                              const PrecisionConfig& cfg) {
    return integrate_smooth_weighted_ladder<R>(kind, params, z, n, T, cfg).back();
}

// ---------------------------------------------------------------------------
// Tail bounds for ∫_T^∞ |φ(t)|·ln^n t·t^(-Re z - 1) dt under two growth models.
//   model A: |φ(t)| ≤ t·exp(-0.005·ln^{3/5} t)      (unconditional shape)
//   model B: |φ(t)| ≤ √t·ln t                        (RH-conditional shape)
// ---------------------------------------------------------------------------

enum class TailModel { model_a, model_b };

inline TailModel parse_tail_model(const std::string& s) {
    if (s == "model_a" || s == "A" || s == "a") return TailModel::model_a;
    if (s == "model_b" || s == "B" || s == "b") return TailModel::model_b;
    throw ConfigError("unknown tail model '" + s + "' (want model_a or model_b)");
}

inline std::string tail_model_name(TailModel m) {
    return m == TailModel::model_a ? "model_a" : "model_b";
}

// ∫_X^∞ u^m e^{-q u} du, q > 0, X > 0: e^{-qX} Σ_{j=0}^m m!/(m-j)! · X^{m-j}/q^{j+1}.
inline double upper_gamma_poly(int m, double q, double X) {
    double term = std::pow(X, m) / q, sum = term;
    for (int j = 1; j <= m; ++j) {
        term *= static_cast<double>(m - j + 1) / (q * X);
        sum += term;
    }
    return std::exp(-q * X) * sum;
}

inline double tail_bound(TailModel kind, std::complex<double> z, int n, double T) {
    if (!(T >= 100.0)) throw DomainError("tail_bound: requires T >= 100");
    if (n < 0 || n > 128) throw ConfigError("tail_bound: n out of range");
    const double sigma = z.real();
    const double X = std::log(T);
    if (kind == TailModel::model_b) {
        if (!(sigma > 0.5))
            throw DomainError("tail_bound model_b: diverges unless Re z > 1/2");
        return upper_gamma_poly(n + 1, sigma - 0.5, X);
    }
    // model A: ∫_X^∞ u^n e^{(1-σ)u - 0.005 u^{3/5}} du, numeric.
    if (!(sigma > 1.0)) throw DomainError("tail_bound model_a: diverges unless Re z > 1");
    const double q = sigma - 1.0;
    const auto f = [&](double u) { return std::pow(u, n) * std::exp(-q * u - 0.005 * std::pow(u, 0.6)); };
    const double panel = std::clamp(1.0 / q, 0.5, 20.0);
    double total = 0.0, a = X;
    const auto& rule = detail::gl_rule<double>(20);
    for (long i = 0; i < 200000; ++i) {
        const double b = a + panel;
        double s = 0.0;
        for (int j = 0; j < 20; ++j)
            s += rule.w[j] * f(0.5 * (a + b) + 0.5 * panel * rule.x[j]);
        s *= 0.5 * panel;
        total += s;
        a = b;
        if (s < 1e-18 * total && a > X + 10 * panel) break;
    }
    return total;
}

inline double tail_bound(const std::string& kind, std::complex<double> z, int n, double T) {
    return tail_bound(parse_tail_model(kind), z, n, T);
}

}  // namespace thetazeta
