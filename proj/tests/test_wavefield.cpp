#include <doctest.h>

#include <cmath>
#include <complex>

#include "bohmrad/qpotential.hpp"
#include "bohmrad/rng.hpp"
#include "bohmrad/wavefield.hpp"
#include "test_support.hpp"

using namespace bohmrad;
using wavefield::Slit;

TEST_CASE("closed form matches the propagator-quadrature oracle") {
    const auto cfg = testsup::wide_config();
    const double x = 13.0;
    SplitMix64 rng(777001);
    for (int i = 0; i < 10; ++i) {
        const double y = (2.0 * rng.uniform01() - 1.0) * 2.6e-4;
        for (int sign : {+1, -1}) {
            const auto closed = wavefield::slit_amplitude(
                cfg, sign > 0 ? Slit::A : Slit::B, x, y);
            const auto oracle = testsup::kernel_quadrature_amplitude(cfg, sign, x, y);
            CHECK(std::abs(closed - oracle) / std::abs(oracle) < 1e-6);
        }
    }
}

TEST_CASE("mirror symmetry of the slit amplitudes") {
    const auto cfg = testsup::wide_config();
    SplitMix64 rng(777002);
    for (int i = 0; i < 25; ++i) {
        const double x = 2.0 + 36.0 * rng.uniform01();
        const double y = (2.0 * rng.uniform01() - 1.0) * 3e-4;
        const auto b_here = wavefield::slit_amplitude(cfg, Slit::B, x, y);
        const auto a_mirror = wavefield::slit_amplitude(cfg, Slit::A, x, -y);
        CHECK(std::abs(b_here - a_mirror) <= 1e-13 * std::abs(a_mirror));
    }
}

TEST_CASE("envelope peaks on the geometric line a/T = (y-a)/t") {
    const auto cfg = testsup::wide_config();
    const double x = 13.0;
    const double t = cfg.t_at(x);
    const double y_star = cfg.a * (1.0 + t / cfg.T);
    const double mag0 = std::abs(wavefield::slit_amplitude(cfg, Slit::A, x, y_star));
    for (double dy : {-3e-6, -1e-6, 1e-6, 3e-6}) {
        CHECK(std::abs(wavefield::slit_amplitude(cfg, Slit::A, x, y_star + dy)) < mag0);
    }
}

TEST_CASE("on-axis constructive interference") {
    const auto cfg = testsup::wide_config();
    for (double x : {1.0, 13.0, 39.0}) {
        const auto wp = wavefield::total_field(cfg, x, 0.0);
        const auto amp = wavefield::slit_amplitude(cfg, Slit::A, x, 0.0);
        CHECK(wp.P == doctest::Approx(4.0 * std::norm(amp)).epsilon(1e-12));
        CHECK(wp.psi_A == wp.psi_B);
    }
}

TEST_CASE("P and S are mirror symmetric") {
    const auto cfg = testsup::wide_config();
    SplitMix64 rng(777003);
    const double two_pi_hbar = 2.0 * M_PI * constants().hbar;
    for (int i = 0; i < 25; ++i) {
        const double x = 2.0 + 36.0 * rng.uniform01();
        const double y = (2.0 * rng.uniform01() - 1.0) * 2.5e-4;
        const auto up = wavefield::total_field(cfg, x, y);
        const auto dn = wavefield::total_field(cfg, x, -y);
        if (up.near_node || dn.near_node) continue;
        CHECK(up.P == doctest::Approx(dn.P).epsilon(1e-10));
        const double ds = std::remainder(up.S - dn.S, two_pi_hbar);
        CHECK(std::fabs(ds) < 1e-8 * std::fabs(up.S) + 1e-30);
    }
}

TEST_CASE("fringe spacing at the screen matches the two-slit formula") {
    const auto cfg = testsup::showcase_config();
    const auto pc = constants();
    const double x = 13.0;
    const double expected = 2.0 * M_PI * pc.hbar * x / (pc.m_e * cfg.v_x * 2.0 * cfg.a);
    CHECK(expected == doctest::Approx(3.6369e-5).epsilon(1e-3));
    CHECK(wavefield::fringe_spacing(cfg, x) == doctest::Approx(expected).epsilon(1e-12));

    // locate two adjacent P-minima numerically and compare their separation
    auto p_at = [&](double y) { return wavefield::total_field(cfg, x, y).P; };
    auto refine_min = [&](double lo, double hi) {
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (p_at(m1) < p_at(m2)) hi = m2; else lo = m1;
        }
        return 0.5 * (lo + hi);
    };
    const double y1 = refine_min(0.25 * expected, 0.75 * expected);
    const double y2 = refine_min(1.25 * expected, 1.75 * expected);
    CHECK(y2 - y1 == doctest::Approx(expected).epsilon(1e-2));
}

TEST_CASE("polar decomposition round-trips the complex field") {
    const auto cfg = testsup::wide_config();
    const auto pc = constants();
    SplitMix64 rng(777004);
    for (int i = 0; i < 30; ++i) {
        const double x = 2.0 + 36.0 * rng.uniform01();
        const double y = (2.0 * rng.uniform01() - 1.0) * 2.5e-4;
        const auto wp = wavefield::total_field(cfg, x, y);
        if (wp.near_node) continue;
        const auto rebuilt = wp.R * std::polar(1.0, wp.S / pc.hbar);
        CHECK(std::abs(rebuilt - wp.psi) < 1e-10 * std::abs(wp.psi));
        CHECK(wp.P == wp.R * wp.R);
        CHECK(wp.principal_branch);
    }
}

TEST_CASE("sweeps unwrap the action continuously") {
    const auto cfg = testsup::wide_config();
    const double two_pi_hbar = 2.0 * M_PI * constants().hbar;
    std::vector<double> ys;
    for (int i = 0; i <= 400; ++i) ys.push_back(-2e-4 + 4e-4 * i / 400.0);
    const auto pts = wavefield::field_sweep(cfg, 13.0, ys);
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].near_node || pts[i - 1].near_node) continue;
        CHECK(std::fabs(pts[i].S - pts[i - 1].S) < 0.7 * two_pi_hbar);
        CHECK_FALSE(pts[i].principal_branch);
    }
}

TEST_CASE("deep envelope wings raise the near-node machinery") {
    const auto cfg = testsup::wide_config();
    const auto wp = wavefield::total_field(cfg, 13.0, 0.05);
    CHECK(wp.near_node);
    CHECK_THROWS_AS(wavefield::guidance_velocity(cfg, 13.0, 0.05),
                    wavefield::NodeProximityError);
    CHECK_THROWS_AS(wavefield::continuity_residual(cfg, 13.0, 0.05, 1e-6, 1e-12),
                    wavefield::NodeProximityError);
    CHECK_THROWS_AS(qpotential::exact_q(cfg, 13.0, 0.05),
                    wavefield::NodeProximityError);
}

TEST_CASE("propagation time is undefined at or before the slit plane") {
    const auto cfg = testsup::wide_config();
    CHECK_THROWS_AS(wavefield::slit_amplitude(cfg, Slit::A, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(wavefield::slit_amplitude(cfg, Slit::A, -1.0, 0.0), std::domain_error);
}

TEST_CASE("continuity residual vanishes at second order") {
    const auto cfg = testsup::wide_config();
    const double x = 13.0;
    const double t0 = cfg.t_at(x);
    const double fringe = wavefield::fringe_spacing(cfg, x);
    const double th1 = qpotential::canyon_angle(cfg, 1);

    SplitMix64 rng(777005);
    int measured = 0;
    for (int i = 0; i < 40 && measured < 20; ++i) {
        // plateau bands around the fringe maxima, both sides plus on-axis
        const int k = static_cast<int>(rng.next() % 4);  // plateau index 0..3
        const double sign = (rng.next() & 1u) ? 1.0 : -1.0;
        const double jitter = 0.3 * (2.0 * rng.uniform01() - 1.0);
        const double y = sign * (k + jitter) * 2.0 * th1 * x;

        const double h_y = fringe / 20.0;
        const double h_t = t0 / 200.0;
        double r1, r2;
        try {
            r1 = wavefield::continuity_residual(cfg, x, y, h_y, h_t);
            r2 = wavefield::continuity_residual(cfg, x, y, 0.5 * h_y, 0.5 * h_t);
        } catch (const wavefield::NodeProximityError&) {
            continue;
        }
        if (r1 < 1e-11) continue;  // too close to the roundoff floor to rate
        const double order = std::log2(r1 / r2);
        CHECK(order > 1.9);
        CHECK(order < 2.4);
        ++measured;
    }
    CHECK(measured >= 20);
}

TEST_CASE("continuity residual is mirror symmetric") {
    const auto cfg = testsup::wide_config();
    const double x = 13.0;
    const double fringe = wavefield::fringe_spacing(cfg, x);
    for (double y : {0.7 * fringe, 1.9 * fringe}) {
        const double up = wavefield::continuity_residual(cfg, x, y, fringe / 25.0, 1e-11);
        const double dn = wavefield::continuity_residual(cfg, x, -y, fringe / 25.0, 1e-11);
        CHECK(up == doctest::Approx(dn).epsilon(1e-10));
    }
}

TEST_CASE("on-axis continuity reduces to the longitudinal balance") {
    const auto cfg = testsup::wide_config();
    const double x = 13.0;
    const double t0 = cfg.t_at(x);
    const double fringe = wavefield::fringe_spacing(cfg, x);
    CHECK(wavefield::guidance_velocity(cfg, x, 0.0) == 0.0);
    const double r1 = wavefield::continuity_residual(cfg, x, 0.0, fringe / 20.0, t0 / 200.0);
    const double r2 =
        wavefield::continuity_residual(cfg, x, 0.0, fringe / 40.0, t0 / 400.0);
    CHECK(r2 < r1);
    CHECK(std::log2(r1 / r2) > 1.9);
}
