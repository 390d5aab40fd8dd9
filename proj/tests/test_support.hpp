#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"
#include "bohmrad/wavefield.hpp"

// Shared fixtures and the independent oracles used across the suites. The
// oracles here deliberately avoid the library's evaluation paths.

namespace testsup {

// a = 1e-4 cm, b = 1e-6 cm, v_x = 1.3e10 cm/s, T = 1e-8 s, screen 13 cm
inline bohmrad::ExperimentConfig showcase_config() {
    return bohmrad::parse_config(
        "a_cm=1e-4\nb_cm=1e-6\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=13\n");
}

// wide-slit variant: b = 1e-5 cm, screen 39 cm
inline bohmrad::ExperimentConfig wide_config() {
    return bohmrad::parse_config(
        "a_cm=1e-4\nb_cm=1e-5\nvx_cm_s=1.3e10\nT_s=1e-8\nscreen_x_cm=39\n");
}

// Brute-force Gaussian-aperture propagator quadrature: composes the free
// kernel source->aperture->point with the exp(-u^2/2b^2) transparency by
// panelled Gauss-Legendre, oscillation-resolved. Independent of the closed
// form under test.
inline std::complex<double> kernel_quadrature_amplitude(
    const bohmrad::ExperimentConfig& cfg, int slit_sign, double x, double y,
    const bohmrad::PhysicalConstants& pc = bohmrad::constants()) {
    using cplx = std::complex<double>;
    const double t = x / cfg.v_x;
    const double mh = pc.m_e / pc.hbar;
    const double center = slit_sign * cfg.a;
    const double span = 12.0 * cfg.b;

    const double dphi = mh * ((std::fabs(y - center) + span) / t +
                              (std::fabs(center) + span) / cfg.T);
    int n_panels = static_cast<int>(2.0 * span * dphi) + 128;
    if (n_panels > 4000000) n_panels = 4000000;

    const cplx root_t = std::sqrt(cplx(0.0, -pc.m_e / (2.0 * M_PI * pc.hbar * t)));
    const cplx root_T = std::sqrt(cplx(0.0, -pc.m_e / (2.0 * M_PI * pc.hbar * cfg.T)));

    static const double xg[8] = {0.0,
                                 0.2011940939974345,
                                 0.3941513470775634,
                                 0.5709721726085388,
                                 0.7244177313601700,
                                 0.8482065834104272,
                                 0.9372733924007059,
                                 0.9879925180204854};
    static const double wg[8] = {0.2025782419255613, 0.1984314853271116,
                                 0.1861610000155622, 0.1662692058169939,
                                 0.1395706779261543, 0.1071592204671719,
                                 0.0703660474881081, 0.0307532419961173};

    auto integrand = [&](double yp) {
        const double gauss =
            std::exp(-(yp - center) * (yp - center) / (2.0 * cfg.b * cfg.b));
        const double phase = 0.5 * mh * ((y - yp) * (y - yp) / t + yp * yp / cfg.T);
        return gauss * std::polar(1.0, phase);
    };

    cplx acc(0.0, 0.0);
    const double lo = center - span;
    const double hw = span / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        const double c = lo + (2 * p + 1) * hw;
        cplx sum = wg[0] * integrand(c);
        for (int j = 1; j < 8; ++j)
            sum += wg[j] * (integrand(c + hw * xg[j]) + integrand(c - hw * xg[j]));
        acc += sum * hw;
    }
    const double xphase = 0.5 * mh * (cfg.X * cfg.X / cfg.T + x * x / t);
    return root_t * root_T * acc * std::polar(1.0, xphase);
}

// Kolmogorov-style sup distance between sorted samples (restricted to
// [lo, hi]) and the CDF of the density f on the same window.
inline double ks_distance(std::vector<double> samples, double lo, double hi,
                          const std::vector<double>& grid_y,
                          const std::vector<double>& grid_f) {
    const int m = static_cast<int>(grid_y.size());
    std::vector<double> cum(m, 0.0);
    for (int i = 1; i < m; ++i)
        cum[i] = cum[i - 1] +
                 0.5 * (grid_f[i] + grid_f[i - 1]) * (grid_y[i] - grid_y[i - 1]);
    for (auto& c : cum) c /= cum.back();

    std::vector<double> in;
    for (double v : samples)
        if (v >= lo && v <= hi) in.push_back(v);
    std::sort(in.begin(), in.end());

    double ks = 0.0;
    for (size_t i = 0; i < in.size(); ++i) {
        const double femp = (i + 1.0) / in.size();
        int idx = static_cast<int>((in[i] - lo) / (hi - lo) * (m - 1));
        if (idx < 0) idx = 0;
        if (idx >= m) idx = m - 1;
        ks = std::max(ks, std::fabs(femp - cum[idx]));
    }
    return ks;
}

}  // namespace testsup
