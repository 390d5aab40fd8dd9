#pragma once

#include <cstdint>
#include <vector>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"
#include "bohmrad/dynamics.hpp"
#include "bohmrad/qpotential.hpp"

// Radiated energy and spectrum of a canyon crossing: Larmor energy of the
// reduced 1-D motion in closed form and by quadrature, the closed-form
// omega^2 K0^2 power spectrum with its peak and analytic total, an independent
// numeric Fourier evaluation for either time map, and the Monte Carlo photon
// screen pattern.

namespace bohmrad::radiation {

enum class TimeMap { exact, sinh_approx };

struct SpectrumSample {
    double omega = 0.0;       // [rad/s]
    double dE_domega = 0.0;   // spectral density [erg s]
    enum class Provenance : std::uint8_t { closed_form, numeric_fourier } provenance =
        Provenance::closed_form;
};

struct RadiationReport {
    int n = 1;
    double energy_closed = 0.0;         // closed-form crossing energy [erg]
    double energy_quadrature = 0.0;     // Larmor quadrature oracle [erg]
    double energy_spectral = 0.0;       // one-sided integral of the closed spectrum [erg]
    double omega_max = 0.0;             // 3/(5 tau_n) [rad/s]
    double tau_n = 0.0;                 // [s]
    double emission_probability = 0.0;  // energy_closed / (hbar omega_max)
    double beta_max = 0.0;              // peak transverse speed / c
    bool beta_regime_flag = false;      // beta_max >= 0.01: dipole treatment suspect
    bool back_reaction_flag = false;    // energy > 1e-3 * kinetic energy
};

// Larmor power (2/3)(e^2/c^3) a^2 for a transverse acceleration a. [erg/s]
double larmor_power(double a_y, const PhysicalConstants& pc = constants());

// Closed-form energy radiated over one crossing of the canyon's Gaussian
// well (the exact Larmor time integral of the reduced motion). [erg]
double crossing_energy_closed(const qpotential::CanyonModel& canyon,
                              const PhysicalConstants& pc = constants());

// Independent oracle: numerically integrates (2e^2/3m^2c^3)|dQ/dy|^2 / ydot
// over the well with ydot = sqrt(-2Q/m). [erg]
double crossing_energy_quadrature(const qpotential::CanyonModel& canyon,
                                  const PhysicalConstants& pc = constants());

// Closed-form spectral density at omega > 0 (omega^2 K0^2 law).
SpectrumSample spectrum_closed(const qpotential::CanyonModel& canyon, double omega,
                               const PhysicalConstants& pc = constants());

// Numeric Fourier evaluation of the same density from the selected time map,
// by half-period quadrature with series acceleration of the oscillatory tail.
SpectrumSample spectrum_numeric(const qpotential::CanyonModel& canyon, double omega,
                                TimeMap map, const PhysicalConstants& pc = constants());

// Analytic omega-integral of the closed-form density over omega > 0. [erg]
double spectral_energy(const qpotential::CanyonModel& canyon,
                       const PhysicalConstants& pc = constants());

// Total radiated energy carried by the numeric spectrum. The density is the
// two-sided transform magnitude, so the total counts both frequency signs;
// with the exact time map this reproduces the Larmor quadrature energy
// (Parseval), with the sinh map it shows the distortion of that
// approximation. [erg]
double spectrum_total_energy(const qpotential::CanyonModel& canyon, TimeMap map,
                             double rel_tol = 1e-6,
                             const PhysicalConstants& pc = constants());

// Peak of the closed-form spectrum per the 3/(5 tau) rule. [rad/s]
double peak_frequency(const qpotential::CanyonModel& canyon);

// True maximizer of omega^2 K0^2(omega tau): root of K0(x) = x K1(x), over
// tau. [rad/s]
double peak_frequency_true(const qpotential::CanyonModel& canyon);

// Peak transverse speed over c, (1/sqrt 3) lambdabar_c a_hat / b^2.
double beta_max(const qpotential::CanyonModel& canyon,
                const PhysicalConstants& pc = constants());

// Aggregated report for canyon n evaluated at the screen plane.
RadiationReport emission_summary(const ExperimentConfig& cfg, int n,
                                 const PhysicalConstants& pc = constants());

// --- photon screen pattern -------------------------------------------------

struct PhotonPatternOptions {
    int collect_rays = 5;         // canyon rays tracked for crossings
    bool importance_sampled = true;  // emit on every crossing, weight by p_n
    int angular_bins = 64;
    dynamics::HistogramSpec screen;  // empty = default landing histogram
};

struct PhotonPattern {
    // electron side (same run, same bins)
    dynamics::LandingHistogram electrons;
    // photon screen pattern: emission sources on the canyon rays projected to
    // the screen plane, weighted by the per-crossing emission probability
    std::vector<double> screen_edges;    // [cm]
    std::vector<double> photon_weight;   // expected photons per bin
    // dipole polar angle psi about the transverse acceleration axis
    std::vector<double> angular_edges;   // [rad], 0..pi
    std::vector<double> angular_weight;
    std::vector<double> sampled_omegas;  // frequency draws [rad/s]
    std::int64_t n_crossings = 0;
    std::int64_t n_bernoulli_photons = 0;  // unweighted-mode emissions
    double total_weight = 0.0;             // expected photon count
};

// Monte Carlo photon pattern: each canyon-ray crossing of the simulated
// ensemble emits with probability E_n/(hbar omega_max) (forced and weighted
// in importance mode), frequency drawn from the normalized closed-form
// density, direction from the sin^2 dipole law about the acceleration axis.
PhotonPattern photon_pattern(const ExperimentConfig& cfg, std::int64_t n_electrons,
                             std::uint64_t seed, const PhotonPatternOptions& opts = {},
                             const PhysicalConstants& pc = constants());

// Inverse-CDF sampler for the normalized closed-form spectral density,
// tabulated on 4096 log-spaced nodes over [1e-3, 50]/tau.
class FrequencySampler {
  public:
    explicit FrequencySampler(const qpotential::CanyonModel& canyon,
                              const PhysicalConstants& pc = constants());
    // u in (0, 1] -> omega [rad/s]
    double sample(double u) const;
    double mean_omega() const;  // of the tabulated density

  private:
    std::vector<double> omegas_;
    std::vector<double> cdf_;
};

// Draws cos(psi) from the dipole intensity sin^2(psi); rejection sampling.
// Returns cos(psi) in (-1, 1); the density vanishes along the axis.
template <typename Rng>
double sample_dipole_cos(Rng& rng) {
    for (;;) {
        const double mu = 2.0 * rng.uniform01() - 1.0;
        if (rng.uniform01() <= 1.0 - mu * mu) return mu;
    }
}

}  // namespace bohmrad::radiation
