#pragma once

#include <stdexcept>
#include <string>

namespace bohmrad {

// Double-slit experiment geometry and kinematics, CGS units. Single source of
// a, b, X, T, v_x for every module.
struct ExperimentConfig {
    double a = 0.0;         // slit half-separation [cm]
    double b = 0.0;         // slit half-width (Gaussian transparency scale) [cm]
    double X = 0.0;         // source-to-slit distance [cm]
    double T = 0.0;         // source-to-slit travel time [s]
    double v_x = 0.0;       // longitudinal speed after the slits [cm/s]
    double screen_x = 0.0;  // slit-plane-to-screen distance [cm]

    // propagation time to the plane at x (paraxial identification t = x/v_x)
    double t_at(double x) const { return x / v_x; }
    double transit_time() const { return screen_x / v_x; }
};

struct ConfigError : public std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parses the plain key=value config format:
//   a_cm, b_cm, T_s, vx_cm_s, screen_x_cm, and optional X_cm (default v_x*T).
// '#' starts a comment. Unknown keys are rejected. Throws ConfigError with a
// line number on parse failure and with the violated invariant on validation
// failure.
ExperimentConfig parse_config(const std::string& text);

// Emits a config in the same key=value format (round-trips through
// parse_config to an identical struct).
std::string serialize_config(const ExperimentConfig& cfg);

// Checks the struct invariants directly; throws ConfigError naming the first
// violated one.
void validate_config(const ExperimentConfig& cfg);

}  // namespace bohmrad
