#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "thetazeta/counterexample.hpp"

using namespace thetazeta;
using C = std::complex<double>;

namespace {
const PrecisionConfig kCfg = [] {
    PrecisionConfig c;
    c.digits = 15;
    return c;
}();

const CounterexampleSpec kSpec02{0.2, 12.0};
const CounterexampleSpec kSpec01{0.1, 12.0};
}  // namespace

TEST_CASE("ce_phi_closed: printed value, zero on the pole axis, pole errors") {
    const C v = ce_phi_closed<double>(C(2, 0), kSpec02);
    CHECK(v.real() == doctest::Approx(2.4 / 145.44).epsilon(1e-15));
    CHECK(v.imag() == 0.0);

    CHECK(std::abs(ce_phi_closed<double>(C(0.8, 0), kSpec02)) == 0.0);  // z = 1 - gamma

    const auto poles = kSpec02.pole_pair();
    CHECK_THROWS_AS(ce_phi_closed<double>(C(poles[0]), kSpec02), PoleError);
    CHECK_THROWS_AS(ce_phi_closed<double>(C(poles[1]), kSpec02), PoleError);
    CHECK_THROWS_AS(ce_phi_closed<double>(C(poles[0]) + C(1e-10, 0), kSpec02), PoleError);
    CHECK_NOTHROW(ce_phi_closed<double>(C(poles[0]) + C(1e-8, 0), kSpec02));

    CounterexampleSpec bad{0.3, 12.0};
    CHECK_THROWS_AS(ce_phi_closed<double>(C(2, 0), bad), ConfigError);
}

TEST_CASE("ce_phi_closed equals the partial-fraction form 1/(z-p+) + 1/(z-p-)") {
    const auto p = kSpec02.pole_pair();
    for (const C z : {C(2, 0), C(1.5, 3), C(3, -5), C(0.9, 0.1)}) {
        const C pf = 1.0 / (z - C(p[0])) + 1.0 / (z - C(p[1]));
        CHECK(std::abs(ce_phi_closed<double>(z, kSpec02) - pf) < 1e-14);
    }
    // real coefficients: phi(conj z) = conj phi(z)
    const C z(2.3, 1.7);
    CHECK(std::abs(ce_phi_closed<double>(std::conj(z), kSpec02) -
                   std::conj(ce_phi_closed<double>(z, kSpec02))) < 1e-15);
}

TEST_CASE("ce_phi_numeric matches the closed form") {
    const auto r = ce_phi_numeric<double>(C(2, 0), kSpec02, kCfg, 1e4);
    const C closed = ce_phi_closed<double>(C(2, 0), kSpec02);
    CHECK(std::abs(r.value - closed) < 1e-8);
    CHECK(std::abs(r.value - closed) <= r.error_bound + 1e-15);
    CHECK(r.error_bound < 1e-8);
    CHECK(r.tail_model.find("geometric") != std::string::npos);

    const auto r2 = ce_phi_numeric<double>(C(1.5, 3), kSpec02, kCfg);
    const C closed2 = ce_phi_closed<double>(C(1.5, 3), kSpec02);
    CHECK(std::abs(r2.value - closed2) <= r2.error_bound + 1e-15);
    CHECK(std::abs(r2.value - closed2) < 1e-10);

    // conj symmetry
    const auto rc = ce_phi_numeric<double>(C(1.5, -3), kSpec02, kCfg);
    CHECK(std::abs(rc.value - std::conj(r2.value)) < 1e-14);

    // divergent side
    CHECK_THROWS_AS(ce_phi_numeric<double>(C(0.8, 1), kSpec02, kCfg), DomainError);
    CHECK_THROWS_AS(ce_phi_numeric<double>(C(0.5, 0), kSpec02, kCfg), DomainError);
}

TEST_CASE("ce_phi_numeric: T caps tau and the geometric tail bound reports it") {
    const auto r = ce_phi_numeric<double>(C(2, 0), kSpec02, kCfg, 5.0);
    CHECK(r.truncation_T == doctest::Approx(5.0));
    const double tail = 2.0 * std::exp(-1.2 * 5.0) / 1.2;
    CHECK(r.error_bound >= tail);
    const C closed = ce_phi_closed<double>(C(2, 0), kSpec02);
    CHECK(std::abs(r.value - closed) <= r.error_bound);
    // uncapped run stops on tolerance, far below tau = 1e4
    const auto full = ce_phi_numeric<double>(C(2, 0), kSpec02, kCfg, 1e4);
    CHECK(full.truncation_T < 100.0);
}

TEST_CASE("closed vs numeric on the 4x4 grid, gamma in {0.1, 0.2}") {
    const double re_lo = 1.1, re_hi = 3.0, im_hi = 5.0;
    for (const auto& spec : {kSpec01, kSpec02}) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const double re = re_lo + (re_hi - re_lo) * i / 3.0;
                const double im = -im_hi + 2.0 * im_hi * j / 3.0;
                const C z(re, im);
                const auto r = ce_phi_numeric<double>(z, spec, kCfg);
                const C closed = ce_phi_closed<double>(z, spec);
                INFO("gamma = " << spec.gamma << " z = " << z);
                CHECK(std::abs(r.value - closed) < 1e-8);
            }
        }
    }
}

TEST_CASE("ce_expansion_ground_truth distances") {
    CHECK(ce_expansion_ground_truth<double>(C(0.8, 0), kSpec02) ==
          doctest::Approx(12.0).epsilon(1e-15));
    CHECK(ce_expansion_ground_truth<double>(C(2, 0), kSpec02) ==
          doctest::Approx(std::sqrt(1.2 * 1.2 + 144.0)).epsilon(1e-15));
    const auto p = kSpec02.pole_pair();
    CHECK(ce_expansion_ground_truth<double>(C(p[0]) + C(0.5, 0), kSpec02) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ce_taylor_expansion: exact coefficients") {
    const auto exp20 = ce_taylor_expansion<double>(C(2, 0), 40, kSpec02);
    CHECK(exp20.N == 40);
    CHECK(exp20.noise_floor_order == -1);
    CHECK(!std::isfinite(exp20.truncation_T));

    // c_0 is the function value, c_1 its derivative (central differences)
    CHECK(std::abs(exp20.coefficients[0] - ce_phi_closed<double>(C(2, 0), kSpec02)) < 1e-15);
    const double h = 1e-6;
    const C fd1 = (ce_phi_closed<double>(C(2 + h, 0), kSpec02) -
                   ce_phi_closed<double>(C(2 - h, 0), kSpec02)) /
                  (2 * h);
    CHECK(std::abs(exp20.coefficients[1] - fd1) < 1e-8);

    // real center, conjugate poles: coefficients are real
    for (const auto& c : exp20.coefficients) CHECK(c.imag() == 0.0);

    // partial sums reproduce phi inside the disk (|z-a| = 3 vs R = 12.06)
    for (const C z : {C(2, 3), C(0.5, 0), C(3.4, -1.2)}) {
        C sum(0), pw(1);
        for (int n = 0; n <= exp20.N; ++n) {
            sum += exp20.coefficients[n] * pw;
            pw *= z - C(2, 0);
        }
        CHECK(std::abs(sum - ce_phi_closed<double>(z, kSpec02)) < 1e-12);
    }

    CHECK_THROWS_AS(ce_taylor_expansion<double>(C(kSpec02.pole_pair()[0]), 10, kSpec02),
                    PoleError);
    CHECK_THROWS_AS(ce_taylor_expansion<double>(C(2, 0), 200, kSpec02), ConfigError);
}

TEST_CASE("radius-estimator calibration on the exact expansion") {
    const double truth = ce_expansion_ground_truth<double>(C(2, 0), kSpec02);
    const auto exp20 = ce_taylor_expansion<double>(C(2, 0), 20, kSpec02);

    const auto reg = estimate_radius(exp20, RadiusMethod::regression);
    INFO("regression estimate " << reg.extrapolated_radius << " truth " << truth);
    CHECK(std::abs(reg.extrapolated_radius - truth) / truth < 0.05);
    CHECK(!reg.unbounded_at_this_order);
    CHECK(reg.caveats.find("exact coefficients") != std::string::npos);

    // max_tail_root carries the (R/2)^(1/n) bias at this order: >= +5% here.
    // that is why the calibration gate runs on the regression estimator.
    const auto mtr = estimate_radius(exp20, RadiusMethod::max_tail_root);
    CHECK(mtr.extrapolated_radius > 1.05 * truth);

    // estimate tightens as N grows
    const auto reg40 = estimate_radius(ce_taylor_expansion<double>(C(2, 0), 40, kSpec02),
                                       RadiusMethod::regression);
    CHECK(std::abs(reg40.extrapolated_radius - truth) / truth <
          std::abs(reg.extrapolated_radius - truth) / truth + 1e-12);
}

TEST_CASE("sigma is sign-variable on every half-period interval") {
    for (int k = 0; k < 24; ++k) {
        double lo = std::exp(k * M_PI / 12.0), hi = std::exp((k + 1) * M_PI / 12.0);
        double mn = 1e300, mx = -1e300;
        for (int i = 0; i <= 50; ++i) {
            const double t = lo * std::pow(hi / lo, i / 50.0);
            const double s = ce_sigma(t, kSpec02);
            mn = std::min(mn, s);
            mx = std::max(mx, s);
        }
        INFO("interval k = " << k);
        CHECK(mn < 0.0);
        CHECK(mx > 0.0);
    }
    CHECK_THROWS_AS(ce_sigma(0.5, kSpec02), DomainError);
}

TEST_CASE("frequency is configurable") {
    const CounterexampleSpec w5{0.1, 5.0};
    const C z(2, 1);
    const auto r = ce_phi_numeric<double>(z, w5, kCfg);
    const C closed = ce_phi_closed<double>(z, w5);
    CHECK(std::abs(r.value - closed) < 1e-10);
    CHECK(ce_expansion_ground_truth<double>(C(2, 0), w5) ==
          doctest::Approx(std::sqrt(1.1 * 1.1 + 25.0)).epsilon(1e-15));
    const CounterexampleSpec neg{0.1, -3.0};
    CHECK_THROWS_AS(ce_phi_closed<double>(C(2, 0), neg), ConfigError);
}

TEST_CASE("high-precision tier") {
    using CB = Cplx<BigReal>;
    PrecisionConfig hp = kCfg;
    hp.digits = 30;
    const auto r = ce_phi_numeric<BigReal>(CB(BigReal(2), BigReal(0)), kSpec02, hp);
    const auto closed = ce_phi_closed<BigReal>(CB(BigReal(2), BigReal(0)), kSpec02);
    CHECK(num::to_double<BigReal>(num::cabs(r.value - closed)) < 1e-25);
}
