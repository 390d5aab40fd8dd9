#pragma once

#include "bohmrad/config.hpp"
#include "bohmrad/constants.hpp"

// The rival prediction: Born-approximation double-slit scattering shape and
// the Bloch-Nordsieck-style upper bound on the radiated energy, for
// side-by-side reporting against the canyon-crossing result.

namespace bohmrad::copenhagen {

struct CopenhagenParams {
    double V0 = 0.0;                 // barrier height [erg], >= mc^2
    double barrier_thickness = 0.0;  // [cm], >= 10 lambdabar_c
    double delta_t = 0.0;            // transit time barrier_thickness/v_x [s]
    double beta = 0.0;               // v_x/c
};

// Minimal admissible barrier: V0 = mc^2 and thickness 10 lambdabar_c, which
// pins the transit time used by the bound.
CopenhagenParams default_params(const ExperimentConfig& cfg,
                                const PhysicalConstants& pc = constants());

void validate_params(const CopenhagenParams& p, const PhysicalConstants& pc = constants());

// Unnormalized Born scattering shape (1/q^2) cos^2(qa/hbar) sin^2(qb/hbar)
// for transverse momentum transfer q > 0 [g cm/s].
double scattering_shape(const ExperimentConfig& cfg, double q,
                        const PhysicalConstants& pc = constants());

// Upper bound (2/3)(r_e lambdabar_c / a^2) beta mc^2 on the radiated energy;
// a strict bound, not an estimate. [erg]
double radiation_bound(const ExperimentConfig& cfg, const CopenhagenParams& params,
                       const PhysicalConstants& pc = constants());

struct ComparisonReport {
    double bohm_energy = 0.0;        // closed-form canyon n=1 energy [erg]
    double copenhagen_bound = 0.0;   // [erg]
    double ratio = 0.0;              // bohm/bound
    int bohm_scaling_a = 4;          // E ~ a^{+4} b^{-8}
    int bohm_scaling_b = -8;
    int copenhagen_scaling_a = -2;   // bound ~ a^{-2}, independent of b
    int copenhagen_scaling_b = 0;
};

// Tabulates the two predictions on the same configuration (canyon n = 1 at
// the screen plane) with their parameter-scaling contrast.
ComparisonReport compare(const ExperimentConfig& cfg,
                         const PhysicalConstants& pc = constants());

}  // namespace bohmrad::copenhagen
