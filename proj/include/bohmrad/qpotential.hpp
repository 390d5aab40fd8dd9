#pragma once

#include <cstdint>
#include <vector>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"
#include "bohmrad/wavefield.hpp"

// Quantum potential of the two-slit field: the exact finite-difference value
// from the wavefield amplitude and the analytic sum-of-Gaussian-canyons model,
// plus the canyon geometry every downstream module consumes.

namespace bohmrad::qpotential {

// Descriptor of the nth canyon at the plane x (t = x/v_x).
struct CanyonModel {
    int n = 1;                 // signed canyon index, |n| >= 1
    double theta_n = 0.0;      // canyon polar angle from the slit midpoint [rad]
    double depth = 0.0;        // |Q_n(0)| [erg]
    double width_scale = 0.0;  // Gaussian 1/e half-width 2*sqrt(2) b^2/a_hat [cm]
    double a_hat = 0.0;        // a / sqrt(1 + t^2/T^2) [cm]
    double tau_n = 0.0;        // crossing time constant [s]
};

struct NonConvergenceError : public std::runtime_error {
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Canyon angle theta_n = sign(n) (|n| - 1/2) pi hbar / (m v_x a).
double canyon_angle(const ExperimentConfig& cfg, int n,
                    const PhysicalConstants& pc = constants());

// Fully populated canyon descriptor; throws std::domain_error for n = 0 or
// x <= 0.
CanyonModel canyon(const ExperimentConfig& cfg, int n, double x,
                   const PhysicalConstants& pc = constants());

// 1-D canyon section Q_n(y) = -depth * exp(-(y/width_scale)^2), y measured
// from the canyon center.
double q1d(const CanyonModel& canyon, double y);

// Analytic derivative dQ_n/dy of the 1-D section.
double q1d_derivative(const CanyonModel& canyon, double y);

// Sum of Gaussian canyon terms over n = +-1..+-n_max in polar form about the
// slit midpoint.
double approx_q(const ExperimentConfig& cfg, double x, double y, int n_max = 5,
                const PhysicalConstants& pc = constants());

// Exact Q = -(hbar^2/2m) lap(R)/R by Richardson-extrapolated central second
// differences of the wavefield amplitude. Throws NodeProximityError when the
// stencil touches R < eps_R and NonConvergenceError when the extrapolation
// disagrees with the fine-step estimate by more than 1e-3 relative.
double exact_q(const ExperimentConfig& cfg, double x, double y,
               const PhysicalConstants& pc = constants());

// Plain (un-extrapolated) central-difference estimate at explicit steps, for
// convergence-rate diagnostics.
double exact_q_step(const ExperimentConfig& cfg, double x, double y, double h_y,
                    double h_x, const PhysicalConstants& pc = constants());

enum class SampleStatus : std::uint8_t { ok = 0, near_node = 1, non_converged = 2 };

struct PotentialSample {
    double x = 0.0;
    double y = 0.0;
    double q = 0.0;  // [erg]
    SampleStatus status = SampleStatus::ok;
};

enum class Provenance { exact, approx };

// Rectangular Q grid, row-major over (x index, y index).
struct PotentialGrid {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<PotentialSample> samples;
    Provenance provenance = Provenance::exact;

    const PotentialSample& at(size_t ix, size_t iy) const {
        return samples[ix * ys.size() + iy];
    }
};

PotentialGrid potential_grid(const ExperimentConfig& cfg, const std::vector<double>& xs,
                             const std::vector<double>& ys, Provenance prov,
                             int n_max = 5, const PhysicalConstants& pc = constants());

// Aligned exact/approx 1-D sections at fixed x for overlay plots and the
// agreement metric; exact_q failures become per-sample markers.
struct CrossSection {
    std::vector<PotentialSample> exact;
    std::vector<PotentialSample> approx;
};

CrossSection cross_section(const ExperimentConfig& cfg, double x, double y_lo,
                           double y_hi, int n_samples, int n_max = 5,
                           const PhysicalConstants& pc = constants());

}  // namespace bohmrad::qpotential
