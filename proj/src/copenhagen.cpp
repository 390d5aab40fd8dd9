#include "bohmrad/copenhagen.hpp"

#include <cmath>
#include <stdexcept>

#include "bohmrad/qpotential.hpp"
#include "bohmrad/radiation.hpp"

namespace bohmrad::copenhagen {

CopenhagenParams default_params(const ExperimentConfig& cfg, const PhysicalConstants& pc) {
    CopenhagenParams p;
    p.V0 = pc.mc2();
    p.barrier_thickness = 10.0 * pc.lambdabar_c;
    p.delta_t = p.barrier_thickness / cfg.v_x;
    p.beta = cfg.v_x / pc.c_light;
    return p;
}

void validate_params(const CopenhagenParams& p, const PhysicalConstants& pc) {
    if (!(p.V0 >= pc.mc2()))
        throw std::domain_error("copenhagen params: V0 must be at least mc^2");
    if (!(p.barrier_thickness >= 10.0 * pc.lambdabar_c))
        throw std::domain_error(
            "copenhagen params: barrier thickness must be at least 10 lambdabar_c");
    if (!(p.delta_t > 0.0)) throw std::domain_error("copenhagen params: delta_t > 0");
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw std::domain_error("copenhagen params: beta in (0, 1)");
}

double scattering_shape(const ExperimentConfig& cfg, double q, const PhysicalConstants& pc) {
    if (!(q > 0.0)) throw std::domain_error("scattering_shape: q must be positive");
    const double c = std::cos(q * cfg.a / pc.hbar);
    const double s = std::sin(q * cfg.b / pc.hbar);
    return c * c * s * s / (q * q);
}

double radiation_bound(const ExperimentConfig& cfg, const CopenhagenParams& params,
                       const PhysicalConstants& pc) {
    validate_params(params, pc);
    return 2.0 / 3.0 * pc.r_e * pc.lambdabar_c / (cfg.a * cfg.a) * params.beta * pc.mc2();
}

ComparisonReport compare(const ExperimentConfig& cfg, const PhysicalConstants& pc) {
    ComparisonReport rep;
    const auto canyon1 = qpotential::canyon(cfg, 1, cfg.screen_x, pc);
    rep.bohm_energy = radiation::crossing_energy_closed(canyon1, pc);
    rep.copenhagen_bound = radiation_bound(cfg, default_params(cfg, pc), pc);
    rep.ratio = rep.bohm_energy / rep.copenhagen_bound;
    return rep;
}

}  // namespace bohmrad::copenhagen
