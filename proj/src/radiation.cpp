#include "bohmrad/radiation.hpp"

#include <algorithm>
#include <cmath>

#include "bohmrad/quadrature.hpp"
#include "bohmrad/rng.hpp"
#include "bohmrad/specfun.hpp"

namespace bohmrad::radiation {

using qpotential::CanyonModel;

double larmor_power(double a_y, const PhysicalConstants& pc) {
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    return 2.0 / 3.0 * pc.e_charge * pc.e_charge / c3 * a_y * a_y;
}

double crossing_energy_closed(const CanyonModel& canyon, const PhysicalConstants& pc) {
    // exact Larmor time integral over the Gaussian well, in terms of the well
    // depth D and 1/e half-width w: E = (8 sqrt(pi) / (9 sqrt 3)) e^2/c^3
    // D^{3/2} / (m^{3/2} w)
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    const double num = 8.0 * std::sqrt(M_PI) / (9.0 * std::sqrt(3.0));
    return num * pc.e_charge * pc.e_charge / c3 *
           std::pow(canyon.depth, 1.5) /
           (std::pow(pc.m_e, 1.5) * canyon.width_scale);
}

double crossing_energy_quadrature(const CanyonModel& canyon, const PhysicalConstants& pc) {
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    const double pref = 2.0 * pc.e_charge * pc.e_charge /
                        (3.0 * pc.m_e * pc.m_e * c3);
    auto integrand = [&](double y) {
        const double dq = qpotential::q1d_derivative(canyon, y);
        const double ydot = std::sqrt(-2.0 * qpotential::q1d(canyon, y) / pc.m_e);
        return pref * dq * dq / ydot;
    };
    const double span = 10.0 * canyon.width_scale;
    const auto res = quad::integrate(integrand, -span, span, 1e-10);
    if (!res.converged)
        throw std::runtime_error("crossing_energy_quadrature: quadrature did not converge");
    return res.value;
}

SpectrumSample spectrum_closed(const CanyonModel& canyon, double omega,
                               const PhysicalConstants& pc) {
    if (!(omega > 0.0)) throw std::domain_error("spectrum_closed: omega must be positive");
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    const double w2 = canyon.width_scale * canyon.width_scale;
    const double k0 = specfun::k0(omega * canyon.tau_n);
    const double val = 8.0 / (27.0 * M_PI) * pc.e_charge * pc.e_charge / c3 * w2 *
                       omega * omega * k0 * k0;
    return {omega, val, SpectrumSample::Provenance::closed_form};
}

namespace {

// slope of the exact time map at the origin, sqrt(3)|n|^{3/2} (m/hbar) b^2/a_hat
double exact_map_slope(const CanyonModel& canyon, const PhysicalConstants& pc) {
    return std::sqrt(3.0) * std::pow(std::fabs(static_cast<double>(canyon.n)), 1.5) *
           pc.m_e / pc.hbar * canyon.width_scale / (2.0 * std::sqrt(2.0));
}

// |integral exp(i omega t(y)) dy| = 2 integral_0^inf cos(omega t(y)) dy
double velocity_transform(const CanyonModel& canyon, double omega, TimeMap map,
                          const PhysicalConstants& pc) {
    if (map == TimeMap::sinh_approx) {
        const double kappa = 3.0 / std::sqrt(2.0) / canyon.width_scale;
        const double z = omega * canyon.tau_n;
        auto phase = [&](double y) { return z * std::sinh(kappa * y); };
        auto dphase = [&](double y) { return z * kappa * std::cosh(kappa * y); };
        return 2.0 * quad::cosine_oscillatory(phase, dphase, 1e-10);
    }

    const double slope = exact_map_slope(canyon, pc);
    const double kp = 1.0 / (std::sqrt(2.0) * canyon.width_scale);
    auto t_of_y = [&](double y) {
        if (y == 0.0) return 0.0;
        const auto res = quad::integrate(
            [&](double u) { return std::exp(kp * u * (kp * u)); }, 0.0, y, 1e-12);
        return slope * res.value;
    };
    auto phase = [&](double y) { return omega * t_of_y(y); };
    auto dphase = [&](double y) { return omega * slope * std::exp(kp * y * (kp * y)); };
    return 2.0 * quad::cosine_oscillatory(phase, dphase, 1e-10);
}

}  // namespace

SpectrumSample spectrum_numeric(const CanyonModel& canyon, double omega, TimeMap map,
                                const PhysicalConstants& pc) {
    if (!(omega > 0.0)) throw std::domain_error("spectrum_numeric: omega must be positive");
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    const double f = velocity_transform(canyon, omega, map, pc);
    const double val =
        pc.e_charge * pc.e_charge * omega * omega / (3.0 * M_PI * c3) * f * f;
    return {omega, val, SpectrumSample::Provenance::numeric_fourier};
}

double spectral_energy(const CanyonModel& canyon, const PhysicalConstants& pc) {
    // integral_0^inf of the closed-form density; uses
    // integral_0^inf x^2 K0^2(x) dx = pi^2/32
    const double c3 = pc.c_light * pc.c_light * pc.c_light;
    const double w2 = canyon.width_scale * canyon.width_scale;
    const double tau3 = canyon.tau_n * canyon.tau_n * canyon.tau_n;
    return M_PI / 108.0 * pc.e_charge * pc.e_charge / c3 * w2 / tau3;
}

double spectrum_total_energy(const CanyonModel& canyon, TimeMap map, double rel_tol,
                             const PhysicalConstants& pc) {
    // two-sided total: the density is symmetric in the frequency sign
    auto integrand = [&](double x) {
        return spectrum_numeric(canyon, x / canyon.tau_n, map, pc).dE_domega;
    };
    const auto res = quad::integrate(integrand, 1e-3, 60.0, rel_tol, 0.0, 600);
    return 2.0 * res.value / canyon.tau_n;
}

double peak_frequency(const CanyonModel& canyon) { return 3.0 / (5.0 * canyon.tau_n); }

double peak_frequency_true(const CanyonModel& canyon) {
    static const double x_star = specfun::k0_k1_crossing();
    return x_star / canyon.tau_n;
}

double beta_max(const CanyonModel& canyon, const PhysicalConstants& pc) {
    // (1/sqrt 3) lambdabar_c a_hat/b^2 with a_hat/b^2 = 2 sqrt 2 / width_scale
    return pc.lambdabar_c / std::sqrt(3.0) * 2.0 * std::sqrt(2.0) / canyon.width_scale;
}

RadiationReport emission_summary(const ExperimentConfig& cfg, int n,
                                 const PhysicalConstants& pc) {
    const CanyonModel cm = qpotential::canyon(cfg, n, cfg.screen_x, pc);

    RadiationReport rep;
    rep.n = n;
    rep.tau_n = cm.tau_n;
    rep.energy_closed = crossing_energy_closed(cm, pc);
    rep.energy_quadrature = crossing_energy_quadrature(cm, pc);
    rep.energy_spectral = spectral_energy(cm, pc);
    rep.omega_max = peak_frequency(cm);
    rep.emission_probability = rep.energy_closed / (pc.hbar * rep.omega_max);
    rep.beta_max = beta_max(cm, pc);
    rep.beta_regime_flag = rep.beta_max >= 0.01;
    const double kinetic = 0.5 * pc.m_e * cfg.v_x * cfg.v_x;
    rep.back_reaction_flag = rep.energy_closed > 1e-3 * kinetic;
    return rep;
}

// --- frequency sampling ------------------------------------------------------

namespace {

// shared normalized inverse CDF of the universal density x^2 K0^2(x) on
// log-spaced nodes over [1e-3, 50]; per-canyon omega = x/tau
struct UniversalSpectrumTable {
    std::vector<double> x;
    std::vector<double> cdf;   // normalized
    double mean_x = 0.0;

    UniversalSpectrumTable() {
        const int n = 4096;
        const double lo = 1e-3, hi = 50.0;
        x.resize(n);
        std::vector<double> pdf(n);
        for (int i = 0; i < n; ++i) {
            x[i] = lo * std::pow(hi / lo, i / (n - 1.0));
            const double k0 = specfun::k0(x[i]);
            pdf[i] = x[i] * x[i] * k0 * k0;
        }
        cdf.assign(n, 0.0);
        double mean_acc = 0.0;
        for (int i = 1; i < n; ++i) {
            const double dx = x[i] - x[i - 1];
            cdf[i] = cdf[i - 1] + 0.5 * (pdf[i] + pdf[i - 1]) * dx;
            mean_acc += 0.5 * (x[i] * pdf[i] + x[i - 1] * pdf[i - 1]) * dx;
        }
        const double norm = cdf.back();
        for (double& c : cdf) c /= norm;
        mean_x = mean_acc / norm;
    }

    double sample(double u) const {
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.begin()) return x.front();
        if (it == cdf.end()) return x.back();
        const size_t i = it - cdf.begin();
        const double c0 = cdf[i - 1], c1 = cdf[i];
        const double t = (u - c0) / (c1 - c0);
        return x[i - 1] + t * (x[i] - x[i - 1]);
    }
};

const UniversalSpectrumTable& universal_table() {
    static const UniversalSpectrumTable table;
    return table;
}

}  // namespace

FrequencySampler::FrequencySampler(const CanyonModel& canyon, const PhysicalConstants&) {
    const auto& tab = universal_table();
    omegas_.reserve(tab.x.size());
    for (double xv : tab.x) omegas_.push_back(xv / canyon.tau_n);
    cdf_ = tab.cdf;
}

double FrequencySampler::sample(double u) const {
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.begin()) return omegas_.front();
    if (it == cdf_.end()) return omegas_.back();
    const size_t i = it - cdf_.begin();
    const double c0 = cdf_[i - 1], c1 = cdf_[i];
    const double t = (u - c0) / (c1 - c0);
    return omegas_[i - 1] + t * (omegas_[i] - omegas_[i - 1]);
}

double FrequencySampler::mean_omega() const {
    // mean of the tabulated density via the universal first moment
    const auto& tab = universal_table();
    return tab.mean_x * omegas_.back() / tab.x.back();
}

// --- photon pattern ----------------------------------------------------------

PhotonPattern photon_pattern(const ExperimentConfig& cfg, std::int64_t n_electrons,
                             std::uint64_t seed, const PhotonPatternOptions& opts,
                             const PhysicalConstants& pc) {
    if (n_electrons < 1) throw std::invalid_argument("photon_pattern: n_electrons >= 1");

    dynamics::HistogramSpec screen =
        opts.screen.edges.empty() ? dynamics::default_histogram(cfg, pc) : opts.screen;
    const auto ens =
        dynamics::ensemble_run(cfg, n_electrons, seed, screen, opts.collect_rays, {}, pc);

    PhotonPattern pat;
    pat.electrons = ens.histogram;
    pat.screen_edges = screen.edges;
    pat.photon_weight.assign(screen.edges.size() - 1, 0.0);
    pat.angular_edges.resize(opts.angular_bins + 1);
    for (int i = 0; i <= opts.angular_bins; ++i)
        pat.angular_edges[i] = M_PI * i / opts.angular_bins;
    pat.angular_weight.assign(opts.angular_bins, 0.0);
    pat.n_crossings = static_cast<std::int64_t>(ens.crossings.size());

    const double left = screen.edges.front();
    const double bin_w = (screen.edges.back() - left) / (screen.edges.size() - 1.0);
    const auto& tab = universal_table();

    std::uint64_t photon_salt = seed ^ 0xC2B2AE3D27D4EB4FULL;
    for (size_t i = 0; i < ens.crossings.size(); ++i) {
        const auto& ev = ens.crossings[i];
        SplitMix64 rng = rng_stream(photon_salt, i);

        const CanyonModel cm = qpotential::canyon(cfg, ev.n, ev.x, pc);
        const double p = std::min(
            1.0, crossing_energy_closed(cm, pc) / (pc.hbar * peak_frequency(cm)));

        double weight = p;
        if (!opts.importance_sampled) {
            if (rng.uniform01() > p) continue;
            weight = 1.0;
            ++pat.n_bernoulli_photons;
        }

        const double omega = tab.sample(rng.uniform01()) / cm.tau_n;
        if (pat.sampled_omegas.size() < 200000) pat.sampled_omegas.push_back(omega);

        const double mu = sample_dipole_cos(rng);
        const double psi = std::acos(mu);
        const int abin = std::min(opts.angular_bins - 1,
                                  static_cast<int>(psi / M_PI * opts.angular_bins));
        pat.angular_weight[abin] += weight;

        // source-direction projection: the flash sits on the canyon ray
        const double y_screen = ev.y / ev.x * cfg.screen_x;
        const double pos = (y_screen - left) / bin_w;
        if (pos >= 0.0 && pos < static_cast<double>(pat.photon_weight.size()))
            pat.photon_weight[static_cast<size_t>(pos)] += weight;
        pat.total_weight += weight;
    }
    return pat;
}

}  // namespace bohmrad::radiation
