#include <doctest.h>

#include <cmath>

#include "bohmrad/quadrature.hpp"
#include "bohmrad/specfun.hpp"

using namespace bohmrad;

TEST_CASE("adaptive integrator on reference integrals") {
    auto poly = quad::integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(poly.converged);
    CHECK(poly.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    auto sine = quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-13));

    // sharp Gaussian needs subdivision
    auto gauss = quad::integrate(
        [](double x) { return std::exp(-500.0 * x * x); }, -3.0, 3.0, 1e-11);
    CHECK(gauss.converged);
    CHECK(gauss.value == doctest::Approx(std::sqrt(M_PI / 500.0)).epsilon(1e-10));
}

TEST_CASE("second moment of K0^2 (feeds the spectral total)") {
    auto res = quad::integrate(
        [](double x) {
            const double k = specfun::k0(x);
            return x * x * k * k;
        },
        1e-6, 60.0, 1e-11, 0.0, 8000);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(M_PI * M_PI / 32.0).epsilon(1e-8));
}

TEST_CASE("series acceleration of an alternating sum") {
    std::vector<double> partial;
    double s = 0.0;
    for (int k = 0; k < 30; ++k) {
        s += (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0);
        partial.push_back(s);
    }
    CHECK(quad::aitken_limit(partial) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("oscillatory cosine integral reproduces the K0 representation") {
    // integral_0^inf cos(z sinh u) du = K0(z); exercises the half-period walk
    // and tail acceleration end to end
    for (double z : {0.05, 0.5, 2.0}) {
        auto phase = [z](double u) { return z * std::sinh(u); };
        auto dphase = [z](double u) { return z * std::cosh(u); };
        const double val = quad::cosine_oscillatory(phase, dphase, 1e-10);
        CHECK(std::fabs(val / specfun::k0(z) - 1.0) < 1e-8);
    }
}
