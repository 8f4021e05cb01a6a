#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "thetazeta/errors.hpp"
#include "thetazeta/precision.hpp"
#include "thetazeta/prime_table.hpp"
#include "thetazeta/quadrature.hpp"

namespace thetazeta {

// φ(t) = π(t) − Li(t), the kernel of θ.
template <class R>
R phi_diff(const R& t, const PrimeTable& table, const PrecisionConfig& cfg = {}) {
    cfg.validate();
    if (!(t >= R(2))) throw DomainError("phi_diff: t must be >= 2");
    const double td = num::to_double<R>(t);
    if (td > static_cast<double>(table.limit)) throw DomainError("phi_diff: t exceeds table limit");
    return R(static_cast<double>(prime_count(table, td))) - li_offset(t, cfg);
}

namespace detail {

// All θ-derivative orders 0..N in two passes over [lower, T]:
//   θ⁽ⁿ⁾(z) = (−1)ⁿ ∫ (π(t) − Li(t))·lnⁿt·t^(−z−1) dt.
// The π part is the exact step ladder, the Li part the panel ladder; if the
// configured lower limit sits below 2, Li alone contributes on [lower, 2).
template <class R>
struct ThetaLadder {
    std::vector<Cplx<R>> value;       // θ⁽ⁿ⁾, n = 0..N
    std::vector<double> comp_error;   // quadrature + rounding on [lower, T]
    std::vector<double> tail;         // tail_bound(model, z, n, T)
    double T = 0.0;
    TailModel model = TailModel::model_a;
};

template <class R>
ThetaLadder<R> theta_ladder(const Cplx<R>& z, int N, const PrimeTable& table,
                            const PrecisionConfig& cfg, double T,
                            TailModel model = TailModel::model_a) {
    cfg.validate();
    using C = Cplx<R>;
    if (!(z.real() > R(1))) throw DomainError("theta: requires Re z > 1");
    if (N < 0) throw DomainError("theta: derivative order must be >= 0");
    if (N > cfg.n_max)
        throw ConfigError("theta: order exceeds n_max=" + std::to_string(cfg.n_max));
    if (T <= 0.0) T = static_cast<double>(table.limit);
    if (T > static_cast<double>(table.limit))
        throw DomainError("theta: T exceeds prime table limit");
    if (T < 100.0) throw DomainError("theta: T must be >= 100 (tail bounds require it)");

    const auto pi_part = integrate_step_weighted_ladder<R>(table, z, N, T, cfg);
    const auto li_part =
        integrate_smooth_weighted_ladder<R>(SmoothKernel::li, SmoothParams<R>{}, z, N, T, cfg);

    // [lower, 2) extension: φ = −Li there (no primes below 2).  Swapping the
    // order of integration gives ext_k = ∫_{v0}^{ln2} (e^v/v)·I_k(v) dv with
    // I_k(v) = ∫_{v0}^{v} e^{-zu} u^k du, v0 = ln(lower).  At v0 = 0 the 1/v
    // pole is cancelled by I_k(v) ~ v^{k+1}; for v0 > 0 it sits at distance
    // v0, so panels are graded geometrically away from it.
    std::vector<C> ext(N + 1, C(0));
    double ext_err = 0.0;
    if (cfg.theta_lower_limit < 2.0) {
        using std::exp;
        using std::log;
        const R v0 = log(R(cfg.theta_lower_limit)), vend = num::ln_two<R>();
        std::vector<R> bnd{v0};
        if (v0 <= R(0))
            bnd.push_back(vend);
        else
            for (R b = v0; b < vend;) {
                b = (2 * b < vend) ? R(2 * b) : vend;
                bnd.push_back(b);
            }
        const int m = gl_order<R>();
        const auto& inner_rule = gl_rule<R>(m);
        // all moments ∫_{lo}^{hi} e^{-zu} u^k du with one GL panel
        const auto moments = [&](const R& lo, const R& hi, std::vector<C>& out_m) {
            std::fill(out_m.begin(), out_m.end(), C(0));
            const R imid = (lo + hi) / 2, ihalf = (hi - lo) / 2;
            for (int i = 0; i < m; ++i) {
                const R u = imid + ihalf * inner_rule.x[i];
                const C e = inner_rule.w[i] * ihalf * exp(-z * u);
                R up(1);
                for (int k = 0; k <= N; ++k) {
                    out_m[k] += e * up;
                    up *= u;
                }
            }
        };
        std::vector<C> half_m(N + 1, C(0)), base(N + 1), inc(N + 1);
        for (int pass = 0; pass < 2; ++pass) {
            auto& acc = pass == 0 ? ext : half_m;
            const int mm = pass == 0 ? m : m / 2;
            const auto& rule = gl_rule<R>(mm);
            std::fill(base.begin(), base.end(), C(0));
            for (std::size_t p = 0; p + 1 < bnd.size(); ++p) {
                const R mid = (bnd[p] + bnd[p + 1]) / 2, half = (bnd[p + 1] - bnd[p]) / 2;
                for (int j = 0; j < mm; ++j) {
                    const R v = mid + half * rule.x[j];
                    moments(bnd[p], v, inc);
                    const C w = rule.w[j] * half * exp(v) / v;
                    for (int k = 0; k <= N; ++k) acc[k] += w * (base[k] + inc[k]);
                }
                moments(bnd[p], bnd[p + 1], inc);
                for (int k = 0; k <= N; ++k) base[k] += inc[k];
            }
        }
        for (int k = 0; k <= N; ++k)
            ext_err = std::max(ext_err, num::to_double<R>(num::cabs(ext[k] - half_m[k])));
    }

    ThetaLadder<R> out;
    out.value.resize(N + 1);
    out.comp_error.resize(N + 1);
    out.tail.resize(N + 1);
    out.T = T;
    out.model = model;
    const auto zc = num::to_cdouble<R>(z);
    for (int n = 0; n <= N; ++n) {
        const C diff = pi_part[n].value - li_part[n].value + ext[n];
        out.value[n] = (n % 2 == 0) ? diff : -diff;
        out.comp_error[n] = pi_part[n].error_bound + li_part[n].error_bound + ext_err;
        out.tail[n] = tail_bound(model, zc, n, T);
    }
    return out;
}

}  // namespace detail

// θ(z) = ∫ (π(t) − Li(t))/t^(z+1) dt on [lower, T], tail bounded beyond T.
template <class R>
QuadratureResult<R> theta(const Cplx<R>& z, const PrimeTable& table, const PrecisionConfig& cfg = {},
                          double T = 0.0, TailModel model = TailModel::model_a) {
    const auto lad = detail::theta_ladder<R>(z, 0, table, cfg, T, model);
    QuadratureResult<R> out;
    out.value = lad.value[0];
    out.error_bound = lad.comp_error[0] + lad.tail[0];
    out.truncation_T = lad.T;
    out.tail_model = tail_model_name(model) + " beyond T";
    return out;
}

// θ⁽ⁿ⁾(a) = (−1)ⁿ ∫ (π − Li)·lnⁿt·t^(−a−1) dt.
template <class R>
QuadratureResult<R> theta_derivative(const Cplx<R>& a, int n, const PrimeTable& table,
                                     const PrecisionConfig& cfg = {}, double T = 0.0,
                                     TailModel model = TailModel::model_a) {
    const auto lad = detail::theta_ladder<R>(a, n, table, cfg, T, model);
    QuadratureResult<R> out;
    out.value = lad.value[n];
    out.error_bound = lad.comp_error[n] + lad.tail[n];
    out.truncation_T = lad.T;
    out.tail_model = tail_model_name(model) + " beyond T";
    const double av = num::to_double<R>(num::cabs(out.value));
    if (lad.tail[n] > 0.1 * av)
        out.tail_model += "; warning: tail bound exceeds 10% of |value| at this order";
    return out;
}

// Taylor data of θ at a: c_n = θ⁽ⁿ⁾(a)/n!.  Error bounds are computational
// (quadrature + rounding on [lower, T]); truncation beyond T is a modeling
// uncertainty surfaced through truncation_T and the scan's T-stability check,
// not folded into the noise floor.
template <class R>
struct TaylorExpansion {
    Cplx<R> center{};
    std::vector<Cplx<R>> coefficients;
    std::vector<double> coeff_error_bounds;
    int N = 0;                    // highest delivered order
    int requested_N = 0;
    int noise_floor_order = -1;   // first order whose bound reached |c_n|; -1 if none
    double truncation_T = 0.0;

    // d_n = (n+1)(c_n + c_{n+1}), the paper's Φ-expansion coefficients.
    std::vector<Cplx<R>> combined_coefficients() const {
        std::vector<Cplx<R>> d;
        for (int n = 0; n + 1 < static_cast<int>(coefficients.size()); ++n)
            d.push_back(R(n + 1) * (coefficients[n] + coefficients[n + 1]));
        return d;
    }
};

template <class R>
TaylorExpansion<R> build_expansion(const Cplx<R>& a, int N, const PrimeTable& table,
                                   const PrecisionConfig& cfg = {}, double T = 0.0,
                                   TailModel model = TailModel::model_a) {
    const auto lad = detail::theta_ladder<R>(a, N, table, cfg, T, model);
    TaylorExpansion<R> out;
    out.center = a;
    out.requested_N = N;
    out.truncation_T = lad.T;
    R fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= R(n);
        const Cplx<R> cn = lad.value[n] / fact;
        const double bound = lad.comp_error[n] / num::to_double<R>(fact);
        if (n > 0 && bound >= num::to_double<R>(num::cabs(cn))) {
            out.noise_floor_order = n;  // deliver orders below the floor only
            break;
        }
        out.coefficients.push_back(cn);
        out.coeff_error_bounds.push_back(bound);
    }
    out.N = static_cast<int>(out.coefficients.size()) - 1;
    return out;
}

enum class RadiusMethod { max_tail_root, regression };

inline RadiusMethod parse_radius_method(const std::string& s) {
    if (s == "max_tail_root") return RadiusMethod::max_tail_root;
    if (s == "regression") return RadiusMethod::regression;
    throw ConfigError("unknown radius method: " + s);
}

inline std::string radius_method_name(RadiusMethod m) {
    return m == RadiusMethod::max_tail_root ? "max_tail_root" : "regression";
}

template <class R>
struct RadiusEstimate {
    Cplx<R> center{};
    std::vector<std::pair<int, double>> root_test_values;           // (n, |c_n|^(−1/n))
    std::vector<std::pair<int, double>> combined_root_test_values;  // same for d_n
    double extrapolated_radius = std::numeric_limits<double>::quiet_NaN();
    bool unbounded_at_this_order = false;
    std::string method;
    std::string caveats;
};

// Cauchy–Hadamard estimators over the upper half of the delivered orders.
// max_tail_root: min |c_n|^(−1/n) (conservative, T-stable).  regression:
// least-squares slope of log|c_n|, which averages out argument oscillation
// from complex pole pairs (the §8 calibration needs this).
template <class R>
RadiusEstimate<R> estimate_radius(const TaylorExpansion<R>& exp_in,
                                  RadiusMethod method = RadiusMethod::max_tail_root) {
    RadiusEstimate<R> out;
    out.center = exp_in.center;
    out.method = radius_method_name(method);

    std::vector<int> usable;  // orders above the noise floor
    for (int n = 0; n <= exp_in.N; ++n) {
        const double cn = num::to_double<R>(num::cabs(exp_in.coefficients[n]));
        if (cn > exp_in.coeff_error_bounds[n] && cn > 0.0) usable.push_back(n);
    }
    if (static_cast<int>(usable.size()) < 8)
        throw InsufficientDataError("estimate_radius: fewer than 8 coefficients above the noise floor");

    for (int n : usable) {
        if (n == 0) continue;
        const double cn = num::to_double<R>(num::cabs(exp_in.coefficients[n]));
        out.root_test_values.emplace_back(n, std::exp(-std::log(cn) / n));
    }
    const auto dn = exp_in.combined_coefficients();
    for (int n = 1; n < static_cast<int>(dn.size()); ++n) {
        const double v = num::to_double<R>(num::cabs(dn[n]));
        if (v > 0.0) out.combined_root_test_values.emplace_back(n, std::exp(-std::log(v) / n));
    }

    const int n_lo = std::max(1, exp_in.N / 2);
    std::vector<std::pair<int, double>> window;  // (n, log|c_n|)
    for (int n : usable)
        if (n >= n_lo)
            window.emplace_back(n,
                                std::log(num::to_double<R>(num::cabs(exp_in.coefficients[n]))));
    if (window.size() < 2)
        throw InsufficientDataError("estimate_radius: fewer than 2 usable orders in the upper half");

    double rms = 0.0;
    if (method == RadiusMethod::max_tail_root) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [n, lc] : window) best = std::min(best, std::exp(-lc / n));
        out.extrapolated_radius = best;
    } else {
        double sn = 0, sy = 0, snn = 0, sny = 0;
        for (const auto& [n, lc] : window) {
            sn += n;
            sy += lc;
            snn += static_cast<double>(n) * n;
            sny += n * lc;
        }
        const double m = static_cast<double>(window.size());
        const double slope = (m * sny - sn * sy) / (m * snn - sn * sn);
        const double icept = (sy - slope * sn) / m;
        for (const auto& [n, lc] : window) {
            const double r = lc - (icept + slope * n);
            rms += r * r;
        }
        rms = std::sqrt(rms / m);
        out.extrapolated_radius = std::exp(-slope);
    }
    if (!(out.extrapolated_radius < 1e6)) out.unbounded_at_this_order = true;

    std::string cav = "orders " + std::to_string(window.front().first) + ".." +
                      std::to_string(window.back().first) + " of N=" + std::to_string(exp_in.N);
    cav += exp_in.noise_floor_order >= 0
               ? "; noise floor at order " + std::to_string(exp_in.noise_floor_order)
               : "; no noise floor within delivered orders";
    cav += std::isfinite(exp_in.truncation_T)
               ? "; T-dependent: coefficients truncated at T=" + format_real(exp_in.truncation_T, 3)
               : "; exact coefficients (no integral truncation)";
    if (method == RadiusMethod::regression)
        cav += "; regression rms residual " + format_real(rms, 3);
    if (!out.combined_root_test_values.empty()) {
        double dbest = std::numeric_limits<double>::infinity();
        for (const auto& [n, v] : out.combined_root_test_values)
            if (n >= n_lo) dbest = std::min(dbest, v);
        if (std::isfinite(dbest))
            cav += "; combined-coefficient (d_n) min tail root " + format_real(dbest, 6);
    }
    out.caveats = cav;
    return out;
}

// One row of the Task 1 scan: estimate plus full truncation provenance.
template <class R>
struct ScanPoint {
    double b = 0.0;
    double epsilon = 0.0;
    bool ok = false;
    RadiusEstimate<R> estimate{};
    int N_used = 0;
    int noise_floor_order = -1;
    double T = 0.0;
    double prime_limit = 0.0;
    int digits = 0;
    bool inside_3pi = false;
    bool inside_4pi = false;
    std::string error;
};

// Scan a = 1+ε+ib over b_values.  Per-point failures are recorded and the
// scan continues; both of the paper's strip half-widths (3π for Π̂, 4π for Π)
// are marked on every row.
template <class R>
std::vector<ScanPoint<R>> task1_scan(double epsilon, const std::vector<double>& b_values, int N,
                                     const PrimeTable& table, const PrecisionConfig& cfg = {},
                                     double T = 0.0,
                                     RadiusMethod method = RadiusMethod::max_tail_root) {
    cfg.validate();
    if (!(epsilon > 0.0)) throw DomainError("task1_scan: epsilon must be > 0");
    std::vector<ScanPoint<R>> rows;
    rows.reserve(b_values.size());
    const double pi3 = 3.0 * num::to_double<R>(num::pi<R>());
    const double pi4 = 4.0 * num::to_double<R>(num::pi<R>());
    for (const double b : b_values) {
        ScanPoint<R> row;
        row.b = b;
        row.epsilon = epsilon;
        row.T = T <= 0.0 ? static_cast<double>(table.limit) : T;
        row.prime_limit = static_cast<double>(table.limit);
        row.digits = cfg.digits;
        row.inside_3pi = std::abs(b) < pi3;
        row.inside_4pi = std::abs(b) < pi4;
        try {
            const Cplx<R> a(R(1) + R(epsilon), R(b));
            const auto exp_ = build_expansion<R>(a, N, table, cfg, T);
            row.estimate = estimate_radius(exp_, method);
            row.N_used = exp_.N;
            row.noise_floor_order = exp_.noise_floor_order;
            row.ok = true;
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace thetazeta
