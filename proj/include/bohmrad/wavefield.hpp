#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"

// Two-slit Gaussian-transparency wavefunction behind the slit plane, its polar
// decomposition, and the continuity diagnostic. All evaluations identify the
// field at (x, y) with the propagation time t = x/v_x.

namespace bohmrad::wavefield {

enum class Slit { A, B };

struct WavePoint {
    std::complex<double> psi_A;
    std::complex<double> psi_B;
    std::complex<double> psi;  // psi_A + psi_B
    double R = 0.0;            // |psi|
    double S = 0.0;            // action, hbar * arg(psi) (+ branch) [erg s]
    double P = 0.0;            // R^2
    bool near_node = false;        // R < eps_R, S unreliable
    bool principal_branch = true;  // S from the principal argument only
};

struct NodeProximityError : public std::runtime_error {
    explicit NodeProximityError(const std::string& what) : std::runtime_error(what) {}
};

// Single-slit amplitude of the Gaussian-slit path integral, evaluated at
// (x, y) with t = x/v_x. Throws std::domain_error for x <= 0.
std::complex<double> slit_amplitude(const ExperimentConfig& cfg, Slit slit, double x,
                                    double y,
                                    const PhysicalConstants& pc = constants());

// Amplitudes of both slits plus the y-derivative of the total field, shared by
// the guidance velocity and the quantum potential. One transcendental-light
// evaluation per point.
struct FieldEval {
    std::complex<double> psi_A;
    std::complex<double> psi_B;
    std::complex<double> psi;
    std::complex<double> dpsi_dy;
    double R;
};
FieldEval eval_field(const ExperimentConfig& cfg, double x, double y,
                     const PhysicalConstants& pc = constants());

// Total field with polar decomposition; isolated query, S on the principal
// branch (marked as such).
WavePoint total_field(const ExperimentConfig& cfg, double x, double y,
                      const PhysicalConstants& pc = constants());

// Contiguous y-sweep at fixed x with 2*pi*hbar branch tracking of S. Points
// with R < eps_R are marked near_node and do not advance the branch anchor.
std::vector<WavePoint> field_sweep(const ExperimentConfig& cfg, double x,
                                   const std::vector<double>& ys,
                                   const PhysicalConstants& pc = constants());

// |d P/dt + d(P v_y)/dy| * t / P at (x, y), central differences with steps
// (h_y, h_t). The longitudinal term is the time derivative under the paraxial
// identification x = v_x t; the flux divergence is transverse. Exactly zero
// for the analytic field, so the finite-difference value converges to zero at
// second order. Throws NodeProximityError if the stencil touches R < eps_R.
double continuity_residual(const ExperimentConfig& cfg, double x, double y,
                           double h_y, double h_t,
                           const PhysicalConstants& pc = constants());

// Near-node guard band: 1e-8 times the field-amplitude scale at this plane.
double eps_R(const ExperimentConfig& cfg, double x,
             const PhysicalConstants& pc = constants());

// Bright-fringe period at the plane x: 2*pi*hbar*x / (m v_x 2a).
double fringe_spacing(const ExperimentConfig& cfg, double x,
                      const PhysicalConstants& pc = constants());

// Transverse guidance velocity v_y = (hbar/m) Im(psi* d_y psi)/|psi|^2,
// branch-insensitive. Throws NodeProximityError near nodes.
double guidance_velocity(const ExperimentConfig& cfg, double x, double y,
                         const PhysicalConstants& pc = constants());

}  // namespace bohmrad::wavefield
