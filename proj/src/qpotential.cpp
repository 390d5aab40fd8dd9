#include "bohmrad/qpotential.hpp"

#include <cmath>
#include <functional>

namespace bohmrad::qpotential {

using wavefield::NodeProximityError;

double canyon_angle(const ExperimentConfig& cfg, int n, const PhysicalConstants& pc) {
    if (n == 0) throw std::domain_error("canyon_angle: n must be nonzero");
    const double mag =
        (std::abs(n) - 0.5) * M_PI * pc.hbar / (pc.m_e * cfg.v_x * cfg.a);
    return n > 0 ? mag : -mag;
}

CanyonModel canyon(const ExperimentConfig& cfg, int n, double x,
                   const PhysicalConstants& pc) {
    if (n == 0) throw std::domain_error("canyon: n must be nonzero");
    if (!(x > 0.0)) throw std::domain_error("canyon: x must be positive");

    const double t = cfg.t_at(x);
    const double spread = 1.0 + t * t / (cfg.T * cfg.T);
    const double a_hat = cfg.a / std::sqrt(spread);
    const double b2 = cfg.b * cfg.b;
    const double abs_n = std::abs(n);

    CanyonModel cm;
    cm.n = n;
    cm.theta_n = canyon_angle(cfg, n, pc);
    cm.a_hat = a_hat;
    cm.depth = pc.hbar * pc.hbar / (6.0 * abs_n * abs_n * abs_n * pc.m_e) *
               (a_hat * a_hat) / (b2 * b2);
    cm.width_scale = 2.0 * std::sqrt(2.0) * b2 / a_hat;
    cm.tau_n = 4.0 * std::pow(abs_n, 1.5) / std::sqrt(3.0) * pc.m_e / pc.hbar *
               (b2 * b2) / (a_hat * a_hat);
    return cm;
}

double q1d(const CanyonModel& canyon, double y) {
    const double u = y / canyon.width_scale;
    return -canyon.depth * std::exp(-u * u);
}

double q1d_derivative(const CanyonModel& canyon, double y) {
    const double w2 = canyon.width_scale * canyon.width_scale;
    return canyon.depth * 2.0 * y / w2 * std::exp(-y * y / w2);
}

double approx_q(const ExperimentConfig& cfg, double x, double y, int n_max,
                const PhysicalConstants& pc) {
    if (n_max < 1) throw std::domain_error("approx_q: n_max must be >= 1");
    const double r = std::hypot(x, y);
    const double theta = std::atan2(y, x);

    const double t = cfg.t_at(x);
    const double spread = 1.0 + t * t / (cfg.T * cfg.T);
    const double a_hat = cfg.a / std::sqrt(spread);
    const double b2 = cfg.b * cfg.b;
    const double depth1 = pc.hbar * pc.hbar / (6.0 * pc.m_e) * (a_hat * a_hat) / (b2 * b2);
    // exponent scale a_hat^2 r^2 / (8 b^4) = (r/width_scale)^2
    const double inv_w2 = a_hat * a_hat / (8.0 * b2 * b2);

    double q = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double theta_n = canyon_angle(cfg, n, pc);
        const double n3 = static_cast<double>(n) * n * n;
        for (double tn : {theta_n, -theta_n}) {
            const double dth = (theta - tn) * r;
            q -= depth1 / n3 * std::exp(-dth * dth * inv_w2);
        }
    }
    return q;
}

namespace {

double amplitude_or_throw(const ExperimentConfig& cfg, double x, double y,
                          double eps, const PhysicalConstants& pc) {
    const double r = wavefield::eval_field(cfg, x, y, pc).R;
    if (r < eps) throw NodeProximityError("exact_q: stencil touches a field node");
    return r;
}

// Richardson-extrapolated central second difference along one axis; also
// returns the fine-step estimate for the convergence check.
struct SecondDiff {
    double extrapolated;
    double fine;
};

SecondDiff second_diff(const std::function<double(double)>& f, double f0, double h) {
    const double coarse = (f(h) - 2.0 * f0 + f(-h)) / (h * h);
    const double hh = 0.5 * h;
    const double fine = (f(hh) - 2.0 * f0 + f(-hh)) / (hh * hh);
    return {(4.0 * fine - coarse) / 3.0, fine};
}

}  // namespace

double exact_q_step(const ExperimentConfig& cfg, double x, double y, double h_y,
                    double h_x, const PhysicalConstants& pc) {
    const double eps = wavefield::eps_R(cfg, x, pc);
    const double r0 = amplitude_or_throw(cfg, x, y, eps, pc);
    const double ryy = (amplitude_or_throw(cfg, x, y + h_y, eps, pc) - 2.0 * r0 +
                        amplitude_or_throw(cfg, x, y - h_y, eps, pc)) /
                       (h_y * h_y);
    const double rxx = (amplitude_or_throw(cfg, x + h_x, y, eps, pc) - 2.0 * r0 +
                        amplitude_or_throw(cfg, x - h_x, y, eps, pc)) /
                       (h_x * h_x);
    return -0.5 * pc.hbar * pc.hbar / pc.m_e * (ryy + rxx) / r0;
}

double exact_q(const ExperimentConfig& cfg, double x, double y,
               const PhysicalConstants& pc) {
    const double eps = wavefield::eps_R(cfg, x, pc);
    const CanyonModel c1 = canyon(cfg, 1, x, pc);
    const double fringe = wavefield::fringe_spacing(cfg, x, pc);
    const double scale = -0.5 * pc.hbar * pc.hbar / pc.m_e;
    const double r0 = amplitude_or_throw(cfg, x, y, eps, pc);

    // y resolves both the canyon width and the fringe scale; x is scaled to
    // the longitudinal/transverse anisotropy of the pattern. The base step is
    // halved until the extrapolation and the fine-step estimate agree.
    double h_y = std::min(c1.width_scale / 24.0, fringe / 50.0);
    double q_rich = 0.0, q_fine = 0.0;
    for (int level = 0; level < 7; ++level, h_y *= 0.5) {
        const double h_x = std::min(h_y * (cfg.v_x * cfg.T / cfg.a), x / 20.0);
        const SecondDiff ryy = second_diff(
            [&](double dy) { return amplitude_or_throw(cfg, x, y + dy, eps, pc); }, r0, h_y);
        const SecondDiff rxx = second_diff(
            [&](double dx) { return amplitude_or_throw(cfg, x + dx, y, eps, pc); }, r0, h_x);
        q_rich = scale * (ryy.extrapolated + rxx.extrapolated) / r0;
        q_fine = scale * (ryy.fine + rxx.fine) / r0;
        const double denom = std::max(std::fabs(q_rich), 1e-3 * c1.depth);
        if (std::fabs(q_rich - q_fine) <= 1e-3 * denom) return q_rich;
    }
    throw NonConvergenceError("exact_q: Richardson extrapolation did not settle");
}

PotentialGrid potential_grid(const ExperimentConfig& cfg, const std::vector<double>& xs,
                             const std::vector<double>& ys, Provenance prov, int n_max,
                             const PhysicalConstants& pc) {
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("potential_grid: x samples must strictly increase");
    for (size_t i = 1; i < ys.size(); ++i)
        if (!(ys[i] > ys[i - 1]))
            throw std::invalid_argument("potential_grid: y samples must strictly increase");

    PotentialGrid grid;
    grid.xs = xs;
    grid.ys = ys;
    grid.provenance = prov;
    grid.samples.reserve(xs.size() * ys.size());
    for (double x : xs) {
        for (double y : ys) {
            PotentialSample s;
            s.x = x;
            s.y = y;
            if (prov == Provenance::approx) {
                s.q = approx_q(cfg, x, y, n_max, pc);
            } else {
                try {
                    s.q = exact_q(cfg, x, y, pc);
                } catch (const NodeProximityError&) {
                    s.status = SampleStatus::near_node;
                } catch (const NonConvergenceError&) {
                    s.status = SampleStatus::non_converged;
                }
            }
            grid.samples.push_back(s);
        }
    }
    return grid;
}

CrossSection cross_section(const ExperimentConfig& cfg, double x, double y_lo,
                           double y_hi, int n_samples, int n_max,
                           const PhysicalConstants& pc) {
    if (n_samples < 2) throw std::invalid_argument("cross_section: need >= 2 samples");
    CrossSection cs;
    cs.exact.reserve(n_samples);
    cs.approx.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double y = y_lo + (y_hi - y_lo) * i / (n_samples - 1.0);
        PotentialSample se{x, y, 0.0, SampleStatus::ok};
        try {
            se.q = exact_q(cfg, x, y, pc);
        } catch (const NodeProximityError&) {
            se.status = SampleStatus::near_node;
        } catch (const NonConvergenceError&) {
            se.status = SampleStatus::non_converged;
        }
        cs.exact.push_back(se);
        cs.approx.push_back({x, y, approx_q(cfg, x, y, n_max, pc), SampleStatus::ok});
    }
    return cs;
}

}  // namespace bohmrad::qpotential
