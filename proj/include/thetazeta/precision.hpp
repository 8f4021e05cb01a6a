#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <cstdio>
#include <limits>
#include <string>

#include "thetazeta/errors.hpp"

namespace thetazeta {

namespace mp = boost::multiprecision;

// High tier: 50 decimal digits of mpfr.  Sized so that a 30-digit answer
// survives the ~6^n cancellation in the pi-vs-Li derivative ladders up to the
// n_max = 40 ceiling (with margin at the scan orders actually used).
inline constexpr unsigned kBigDigits = 50;

using BigReal = mp::number<mp::mpfr_float_backend<kBigDigits>, mp::et_off>;
using BigComplex =
    mp::number<mp::complex_adaptor<mp::mpfr_float_backend<kBigDigits>>, mp::et_off>;

template <class R>
struct complex_of {
    using type = std::complex<R>;
};
template <>
struct complex_of<BigReal> {
    using type = BigComplex;
};
template <class R>
using Cplx = typename complex_of<R>::type;

inline constexpr int kMinDigits = 15;
inline constexpr int kMaxDigits = 45;  // backend carries 50; 5 guard digits
inline constexpr int kDoubleTierMax = 16;

struct PrecisionConfig {
    int digits = 30;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int n_max = 40;
    double integral_repr_T = 1e4;
    // θ's lower limit: the abstract writes 1, §5 writes 2.  Default 2; only the
    // Li part changes on [1,2) since there are no primes there.
    double theta_lower_limit = 2.0;

    bool use_double() const { return digits <= kDoubleTierMax; }

    void validate() const {
        if (digits < kMinDigits || digits > kMaxDigits)
            throw ConfigError("digits must lie in [" + std::to_string(kMinDigits) + ", " +
                              std::to_string(kMaxDigits) + "], got " + std::to_string(digits));
        if (!(abs_tol > 0.0) || !boost::math::isfinite(abs_tol))
            throw ConfigError("abs_tol must be positive and finite");
        if (!(rel_tol > 0.0) || !boost::math::isfinite(rel_tol))
            throw ConfigError("rel_tol must be positive and finite");
        if (n_max < 1 || n_max > 128)
            throw ConfigError("n_max must lie in [1, 128], got " + std::to_string(n_max));
        if (!(integral_repr_T >= 100.0))
            throw ConfigError("integral_repr_T must be >= 100");
        if (!(theta_lower_limit >= 1.0) || !(theta_lower_limit <= 2.0))
            throw ConfigError("theta_lower_limit must lie in [1, 2]");
    }
};

namespace num {

template <class R>
inline double to_double(const R& x) {
    return static_cast<double>(x);
}

template <class R>
inline std::complex<double> to_cdouble(const Cplx<R>& z) {
    return {to_double<R>(z.real()), to_double<R>(z.imag())};
}

template <class R>
inline R from_string(const std::string& s);
template <>
inline double from_string<double>(const std::string& s) {
    return std::stod(s);
}
template <>
inline BigReal from_string<BigReal>(const std::string& s) {
    return BigReal(s);
}

template <class R>
inline R eps() {
    return std::numeric_limits<R>::epsilon();
}

template <class R>
inline R pi() {
    return boost::math::constants::pi<R>();
}
template <class R>
inline R ln_two() {
    return boost::math::constants::ln_two<R>();
}
template <class R>
inline R euler_gamma() {
    return boost::math::constants::euler<R>();
}

template <class C>
inline auto cabs(const C& z) {
    using std::abs;
    return abs(z);
}

}  // namespace num

inline std::string format_real(double v, int digits) {
    if (digits > 17) digits = 17;
    if (digits < 1) digits = 1;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
    return buf;
}

inline std::string format_real(const BigReal& v, int digits) {
    if (digits < 1) digits = 1;
    return v.str(digits, std::ios_base::scientific);
}

}  // namespace thetazeta
