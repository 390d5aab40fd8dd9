#pragma once

#include <cstdint>
#include <vector>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"
#include "bohmrad/qpotential.hpp"
#include "bohmrad/wavefield.hpp"

// Bohmian electron trajectories in the two-slit field (first-order guidance
// law, adaptive embedded Runge-Kutta), ensemble landing statistics, and the
// reduced 1-D canyon-crossing kinematics.

namespace bohmrad::dynamics {

using wavefield::guidance_velocity;

struct TrajectorySample {
    double t;    // [s]
    double x;    // [cm]
    double y;    // [cm]
    double v_y;  // [cm/s]
    double a_y;  // [cm/s^2], filled by differentiating v_y along the path
};

enum class TrajectoryStatus : std::uint8_t { ok, node_collision, step_collapse };

struct Trajectory {
    std::vector<TrajectorySample> samples;
    wavefield::Slit slit_of_origin = wavefield::Slit::A;
    TrajectoryStatus status = TrajectoryStatus::ok;
};

struct IntegratorOptions {
    double rel_tol = 1e-8;
    double dt_min_fraction = 1e-6;  // of the screen transit time
    double dt_max = 0.0;            // 0 = transit/64
};

// Launch time just downstream of the slit plane, chosen so the slit-plane
// two-Gaussian mixture with standard deviation b matches |psi|^2 there.
double launch_time(const ExperimentConfig& cfg, const PhysicalConstants& pc = constants());

// Integrates one trajectory from the launch plane to the screen. y0 is the
// ordinate at the launch plane; v_y starts on the guidance value. a_y along
// the path comes from finite differences of v_y over the accepted steps.
Trajectory integrate_trajectory(const ExperimentConfig& cfg, double y0,
                                double dt_max = 0.0,
                                const PhysicalConstants& pc = constants());

// Linear interpolation of y at a given x inside the sampled range.
double sample_y_at(const Trajectory& traj, double x);

// A trajectory's crossing of the canyon ray n (the line y = theta_n x).
struct CanyonCrossing {
    double t;  // [s]
    double x;  // [cm]
    double y;  // [cm]
    int n;     // signed canyon index
};

struct LandingHistogram {
    std::vector<double> bin_edges;  // size counts.size()+1 [cm]
    std::vector<std::int64_t> counts;
    std::int64_t n_samples = 0;
    std::int64_t n_aborted = 0;
    std::int64_t n_out_of_range = 0;
    double screen_x = 0.0;
};

struct HistogramSpec {
    std::vector<double> edges;
};

// Default landing histogram: 57 bins of an eighth of a fringe, offset so the
// dark-fringe positions theta_n * screen_x fall on bin centers.
HistogramSpec default_histogram(const ExperimentConfig& cfg,
                                const PhysicalConstants& pc = constants());

struct EnsembleResult {
    LandingHistogram histogram;
    std::vector<double> landings;           // landing ordinates of live trajectories
    std::vector<CanyonCrossing> crossings;  // filled when collect_rays > 0
};

// Seeded ensemble: initial ordinates from the two-Gaussian slit mixture,
// trajectories integrated in parallel, landing histogram plus (optionally)
// all canyon-ray crossings with |n| <= collect_rays. Identical seed and
// arguments give bit-identical results. Throws if more than 1% of the
// trajectories abort.
EnsembleResult ensemble_run(const ExperimentConfig& cfg, std::int64_t n_samples,
                            std::uint64_t seed, const HistogramSpec& hist,
                            int collect_rays = 0,
                            const IntegratorOptions& opts = {},
                            const PhysicalConstants& pc = constants());

LandingHistogram ensemble_landing(const ExperimentConfig& cfg, std::int64_t n_samples,
                                  std::uint64_t seed,
                                  const PhysicalConstants& pc = constants());

// Time maps of the reduced 1-D canyon crossing, with y = 0 at
// the canyon center and zero transverse velocity at infinity.

// t(y) by adaptive quadrature of the exact inverse-velocity integral; odd in
// y. Refuses |y| where the integrand exponent exceeds 700.
double crossing_time_exact(const qpotential::CanyonModel& canyon, double y,
                           const PhysicalConstants& pc = constants());

// sinh-form approximation tau_n * sinh(3 a_hat y / (4 b^2)).
double crossing_time_sinh(const qpotential::CanyonModel& canyon, double y);

// Reduced 1-D crossing integrated as the second-order equation of motion
// m dv/dt = -dQ_n/dy from the canyon center; used as an independent check of
// the time maps and of energy conservation.
struct ReducedState {
    double t;
    double y;
    double v;
};
std::vector<ReducedState> reduced_crossing(const qpotential::CanyonModel& canyon,
                                           double y_end, int n_outputs,
                                           const PhysicalConstants& pc = constants());

}  // namespace bohmrad::dynamics
