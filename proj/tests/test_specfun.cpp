#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bohmrad/quadrature.hpp"
#include "bohmrad/rng.hpp"
#include "bohmrad/specfun.hpp"

using namespace bohmrad;

namespace {

// independent oracle: K_nu(x) = integral_0^inf exp(-x cosh t) cosh(nu t) dt
double k_integral_rep(double x, int nu) {
    const double t_max = std::acosh(706.0 / x) + 1.0;
    auto res = quad::integrate(
        [&](double u) {
            return std::exp(-x * std::cosh(u)) * (nu == 0 ? 1.0 : std::cosh(u));
        },
        0.0, t_max, 1e-14, 1e-300, 20000);
    return res.value;
}

}  // namespace

TEST_CASE("K0 and K1 reference values") {
    CHECK(specfun::k0(1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK(specfun::k1(1.0) == doctest::Approx(0.60190723019723458).epsilon(1e-12));
    CHECK(specfun::i0(1.0) == doctest::Approx(1.26606587775200834).epsilon(1e-12));
    CHECK(specfun::i1(1.0) == doctest::Approx(0.56515910399248503).epsilon(1e-12));
}

TEST_CASE("integral-representation oracle across the working range") {
    // log-spaced sweep of [1e-6, 50]; accuracy contract is 1e-10 relative
    for (int i = 0; i <= 40; ++i) {
        const double x = 1e-6 * std::pow(50.0 / 1e-6, i / 40.0);
        const double ref0 = k_integral_rep(x, 0);
        const double ref1 = k_integral_rep(x, 1);
        CHECK(std::fabs(specfun::k0(x) / ref0 - 1.0) < 1e-10);
        CHECK(std::fabs(specfun::k1(x) / ref1 - 1.0) < 1e-10);
        CHECK(specfun::bessel_k0(x).est_error <= 1e-10);
        CHECK(specfun::bessel_k1(x).est_error <= 1e-10);
    }
}

TEST_CASE("regime crossover is continuous") {
    const double below = specfun::k0(2.0 - 1e-9);
    const double above = specfun::k0(2.0 + 1e-9);
    CHECK(std::fabs(below / above - 1.0) < 1e-8);
    CHECK(std::fabs(specfun::k1(2.0 - 1e-9) / specfun::k1(2.0 + 1e-9) - 1.0) < 1e-8);
}

TEST_CASE("small- and large-argument limits") {
    constexpr double euler_gamma = 0.57721566490153286;
    // K0 -> -log(x/2) - gamma
    const double x = 1e-8;
    CHECK(std::fabs(specfun::k0(x) / (-std::log(0.5 * x) - euler_gamma) - 1.0) < 1e-10);
    // x K1 -> 1
    CHECK(std::fabs(x * specfun::k1(x) - 1.0) < 1e-10);
    // leading asymptotic at x = 30
    const double lead = std::sqrt(M_PI / (2.0 * 30.0)) * std::exp(-30.0);
    CHECK(std::fabs(specfun::k0(30.0) / lead - 1.0) < 0.01);
}

TEST_CASE("domain errors and underflow flag") {
    CHECK_THROWS_AS(specfun::k0(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::k0(-1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::k1(-0.5), std::domain_error);
    const auto big = specfun::bessel_k0(701.0);
    CHECK(big.underflowed);
    CHECK(big.value == 0.0);
}

TEST_CASE("derivative identity K1 = -dK0/dx") {
    for (double x : {0.5, 1.0, 2.0}) {
        const double h = 1e-5 * x;
        const double fd = (specfun::k0(x - h) - specfun::k0(x + h)) / (2.0 * h);
        CHECK(std::fabs(fd / specfun::k1(x) - 1.0) < 1e-6);
    }
    SplitMix64 rng(20240301);
    for (int i = 0; i < 20; ++i) {
        const double x = 0.1 + 20.0 * rng.uniform01();
        const double h = 1e-5 * x;
        const double fd = (specfun::k0(x - h) - specfun::k0(x + h)) / (2.0 * h);
        CHECK(std::fabs(fd - specfun::k1(x)) < 1e-6 * std::fabs(specfun::k1(x)) + 1e-300);
    }
}

TEST_CASE("positivity, monotonicity, log-convexity on a grid") {
    double prev = 0.0, prev_x = 0.0;
    std::vector<double> logk;
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) {
        const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 999.0);
        const double v0 = specfun::k0(x);
        const double v1 = specfun::k1(x);
        CHECK(v0 > 0.0);
        CHECK(v1 > 0.0);
        if (i > 0) CHECK(v0 < prev);
        prev = v0;
        prev_x = x;
        xs.push_back(x);
        logk.push_back(std::log(v0));
    }
    (void)prev_x;
    // log K0 is convex: discrete second difference nonnegative on a uniform
    // grid in x
    for (int i = 1; i < 999; ++i) {
        const double x = xs[i];
        const double h = 1e-3 * x;
        const double d2 = std::log(specfun::k0(x + h)) - 2.0 * std::log(specfun::k0(x)) +
                          std::log(specfun::k0(x - h));
        CHECK(d2 > -1e-12);
    }
}

TEST_CASE("root of K0(x) = x K1(x) fixes the spectrum peak") {
    const double x_star = specfun::k0_k1_crossing();
    // independent grid maximization of x^2 K0^2
    double best_x = 0, best = -1;
    for (int i = 0; i <= 60000; ++i) {
        const double x = 0.3 + 0.6 * i / 60000.0;
        const double k = specfun::k0(x);
        if (x * x * k * k > best) {
            best = x * x * k * k;
            best_x = x;
        }
    }
    CHECK(std::fabs(x_star - best_x) < 2e-5);
    CHECK(x_star == doctest::Approx(0.5950468).epsilon(1e-5));
    // within 10% of the 3/5 rule
    CHECK(std::fabs(x_star - 0.6) / 0.6 < 0.10);
}
