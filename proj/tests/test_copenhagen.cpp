#include <doctest.h>

#include <cmath>

#include "bohmrad/copenhagen.hpp"
#include "test_support.hpp"

using namespace bohmrad;

TEST_CASE("scattering shape zeros and small-q limit") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    // cosine zeros at q a/hbar = pi/2 + k pi
    for (int k = 0; k < 4; ++k) {
        const double q = (M_PI / 2.0 + k * M_PI) * pc.hbar / cfg.a;
        CHECK(copenhagen::scattering_shape(cfg, q) <
              1e-20 * cfg.b * cfg.b / (pc.hbar * pc.hbar));
    }
    // small-q plateau b^2/hbar^2 up to O(q^2)
    const double q_small = 1e-3 * pc.hbar / cfg.a;
    const double plateau = cfg.b * cfg.b / (pc.hbar * pc.hbar);
    CHECK(copenhagen::scattering_shape(cfg, q_small) ==
          doctest::Approx(plateau).epsilon(1e-5));
    CHECK_THROWS_AS(copenhagen::scattering_shape(cfg, 0.0), std::domain_error);
}

TEST_CASE("first interior maximum sits at momentum transfer of order hbar/a") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    const double unit = pc.hbar / cfg.a;
    double best_q = 0.0, best = -1.0;
    for (int i = 1; i <= 4000; ++i) {
        const double q = (2.0 + 1.5 * i / 4000.0) * unit;  // past the first zero
        const double v = copenhagen::scattering_shape(cfg, q);
        if (v > best) {
            best = v;
            best_q = q;
        }
    }
    CHECK(best_q / unit > 1.0);
    CHECK(best_q / unit < M_PI);
}

TEST_CASE("cosine factor is periodic in q with period 2 pi hbar / a") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    const double period = 2.0 * M_PI * pc.hbar / cfg.a;
    auto cos_factor = [&](double q) {
        const double s = std::sin(q * cfg.b / pc.hbar);
        return copenhagen::scattering_shape(cfg, q) * q * q / (s * s);
    };
    for (double q : {0.7 * period, 1.3 * period}) {
        CHECK(cos_factor(q + period) == doctest::Approx(cos_factor(q)).epsilon(1e-9));
    }
}

TEST_CASE("radiation bound on the worked example") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    const auto params = copenhagen::default_params(cfg);
    CHECK(params.beta == doctest::Approx(1.3e10 / 2.99792458e10).epsilon(1e-12));
    CHECK(params.V0 >= pc.mc2());
    CHECK(params.barrier_thickness >= 10.0 * pc.lambdabar_c);

    const double bound = copenhagen::radiation_bound(cfg, params);
    CHECK(pc.erg_to_eV(bound) == doctest::Approx(1.6e-10).epsilon(0.05));
    CHECK(pc.erg_to_eV(bound) == doctest::Approx(1.607495e-10).epsilon(1e-5));

    // 1/a^2 scaling, independent of b
    auto cfg2 = cfg;
    cfg2.a *= 3.0;
    CHECK(copenhagen::radiation_bound(cfg2, copenhagen::default_params(cfg2)) ==
          doctest::Approx(bound / 9.0).epsilon(1e-12));
    auto cfg3 = cfg;
    cfg3.b *= 5.0;
    CHECK(copenhagen::radiation_bound(cfg3, copenhagen::default_params(cfg3)) ==
          doctest::Approx(bound).epsilon(1e-12));

    // bound decreases with a and is linear in beta
    auto slow = cfg;
    slow.v_x *= 0.5;
    CHECK(copenhagen::radiation_bound(slow, copenhagen::default_params(slow)) ==
          doctest::Approx(0.5 * bound).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    auto params = copenhagen::default_params(cfg);
    params.V0 = 0.5 * pc.mc2();
    CHECK_THROWS_AS(copenhagen::validate_params(params), std::domain_error);
    params = copenhagen::default_params(cfg);
    params.barrier_thickness = pc.lambdabar_c;
    CHECK_THROWS_AS(copenhagen::validate_params(params), std::domain_error);
}

TEST_CASE("comparison report") {
    const auto cfg = testsup::showcase_config();
    const auto rep1 = copenhagen::compare(cfg);
    const auto rep2 = copenhagen::compare(cfg);
    CHECK(rep1.bohm_energy == rep2.bohm_energy);
    CHECK(rep1.copenhagen_bound == rep2.copenhagen_bound);
    CHECK(rep1.ratio == doctest::Approx(110.649).epsilon(1e-3));
    CHECK(rep1.bohm_scaling_a == 4);
    CHECK(rep1.bohm_scaling_b == -8);
    CHECK(rep1.copenhagen_scaling_a == -2);
    CHECK(rep1.copenhagen_scaling_b == 0);
}
