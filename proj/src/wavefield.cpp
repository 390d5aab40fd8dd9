#include "bohmrad/wavefield.hpp"

#include <cmath>

namespace bohmrad::wavefield {

namespace {

using cplx = std::complex<double>;

// t-dependent pieces shared by both slits at one plane
struct PlaneTerms {
    double t;     // propagation time behind the slits [s]
    double s;     // 1/T + 1/t [1/s]
    double dden;  // s^2 + (hbar/(m b^2))^2 [1/s^2]
    cplx pref;    // slit-independent complex prefactor [1/cm], including the
                  // longitudinal phases exp(i m/2hbar (X^2/T + x^2/t))
};

PlaneTerms plane_terms(const ExperimentConfig& cfg, double x,
                       const PhysicalConstants& pc) {
    if (!(x > 0.0))
        throw std::domain_error("wavefield: x must be positive (t = x/v_x undefined)");
    PlaneTerms pt;
    pt.t = cfg.t_at(x);
    pt.s = 1.0 / cfg.T + 1.0 / pt.t;
    const double chi = pc.hbar / (pc.m_e * cfg.b * cfg.b);  // [1/s]
    pt.dden = pt.s * pt.s + chi * chi;

    // product of the two free-propagator roots and the Gaussian-integral root;
    // the principal branches here match the aperture-quadrature composition
    const double mh = pc.m_e / (2.0 * M_PI * pc.hbar);
    const cplx root_t = std::sqrt(cplx(0.0, -mh / pt.t));
    const cplx root_T = std::sqrt(cplx(0.0, -mh / cfg.T));
    // -gamma = 1/(2b^2) - i (m/2hbar) s
    const cplx minus_gamma(0.5 / (cfg.b * cfg.b), -0.5 * pc.m_e * pt.s / pc.hbar);
    const cplx root_g = std::sqrt(M_PI / minus_gamma);

    // the longitudinal phase is huge (~1e11 rad); keep it as its own rotation
    // so it cannot wash out the order-one transverse phase structure
    const double x_phase =
        0.5 * pc.m_e / pc.hbar * (cfg.X * cfg.X / cfg.T + x * x / pt.t);
    pt.pref = root_t * root_T * root_g * std::polar(1.0, x_phase);
    return pt;
}

// amplitude and log-derivative factor for the slit at +a seen from ordinate u
// (slit A: u = y, slit B: u = -y with an overall sign on the derivative)
struct SlitTerm {
    cplx value;
    cplx dlog_du;
};

SlitTerm slit_term(const ExperimentConfig& cfg, const PlaneTerms& pt, double u,
                   const PhysicalConstants& pc) {
    const double d = cfg.a / cfg.T - (u - cfg.a) / pt.t;
    const double b2 = cfg.b * cfg.b;
    const double env_exp = -0.5 * d * d / (b2 * pt.dden);
    const double env = std::exp(env_exp);

    const double mh = pc.m_e / pc.hbar;
    const double phase =
        0.5 * mh * (cfg.a * cfg.a / cfg.T + (u - cfg.a) * (u - cfg.a) / pt.t -
                    pt.s * d * d / pt.dden);

    SlitTerm st;
    st.value = pt.pref * env * std::polar(1.0, phase);
    st.dlog_du = cplx(d / (pt.t * b2 * pt.dden),
                      mh * ((u - cfg.a) / pt.t + pt.s * d / (pt.t * pt.dden)));
    return st;
}

}  // namespace

double eps_R(const ExperimentConfig& cfg, double x, const PhysicalConstants& pc) {
    const PlaneTerms pt = plane_terms(cfg, x, pc);
    return 1e-8 * 2.0 * std::abs(pt.pref);
}

double fringe_spacing(const ExperimentConfig& cfg, double x,
                      const PhysicalConstants& pc) {
    return M_PI * pc.hbar * x / (pc.m_e * cfg.v_x * cfg.a);
}

std::complex<double> slit_amplitude(const ExperimentConfig& cfg, Slit slit, double x,
                                    double y, const PhysicalConstants& pc) {
    const PlaneTerms pt = plane_terms(cfg, x, pc);
    const double u = (slit == Slit::A) ? y : -y;
    return slit_term(cfg, pt, u, pc).value;
}

FieldEval eval_field(const ExperimentConfig& cfg, double x, double y,
                     const PhysicalConstants& pc) {
    const PlaneTerms pt = plane_terms(cfg, x, pc);
    const SlitTerm ta = slit_term(cfg, pt, y, pc);
    const SlitTerm tb = slit_term(cfg, pt, -y, pc);

    FieldEval fe;
    fe.psi_A = ta.value;
    fe.psi_B = tb.value;
    fe.psi = ta.value + tb.value;
    // d/dy psi_B(y) = -psi_B * L(-y)
    fe.dpsi_dy = ta.value * ta.dlog_du - tb.value * tb.dlog_du;
    fe.R = std::abs(fe.psi);
    return fe;
}

WavePoint total_field(const ExperimentConfig& cfg, double x, double y,
                      const PhysicalConstants& pc) {
    const FieldEval fe = eval_field(cfg, x, y, pc);
    WavePoint wp;
    wp.psi_A = fe.psi_A;
    wp.psi_B = fe.psi_B;
    wp.psi = fe.psi;
    wp.R = fe.R;
    wp.P = fe.R * fe.R;
    wp.S = pc.hbar * std::arg(fe.psi);
    wp.near_node = fe.R < eps_R(cfg, x, pc);
    wp.principal_branch = true;
    return wp;
}

std::vector<WavePoint> field_sweep(const ExperimentConfig& cfg, double x,
                                   const std::vector<double>& ys,
                                   const PhysicalConstants& pc) {
    std::vector<WavePoint> out;
    out.reserve(ys.size());
    const double two_pi_hbar = 2.0 * M_PI * pc.hbar;

    bool have_anchor = false;
    double anchor = 0.0;
    for (double y : ys) {
        WavePoint wp = total_field(cfg, x, y, pc);
        if (!wp.near_node) {
            if (have_anchor) {
                wp.S += two_pi_hbar * std::round((anchor - wp.S) / two_pi_hbar);
            }
            anchor = wp.S;
            have_anchor = true;
            wp.principal_branch = false;
        }
        out.push_back(wp);
    }
    return out;
}

double guidance_velocity(const ExperimentConfig& cfg, double x, double y,
                         const PhysicalConstants& pc) {
    const FieldEval fe = eval_field(cfg, x, y, pc);
    if (fe.R < eps_R(cfg, x, pc))
        throw NodeProximityError("guidance_velocity: field node at the evaluation point");
    const double p2 = fe.R * fe.R;
    return pc.hbar / pc.m_e * std::imag(std::conj(fe.psi) * fe.dpsi_dy) / p2;
}

double continuity_residual(const ExperimentConfig& cfg, double x, double y,
                           double h_y, double h_t, const PhysicalConstants& pc) {
    const double t0 = cfg.t_at(x);
    const double vx = cfg.v_x;

    // P has no explicit x dependence, so shifting t is the longitudinal
    // direction; evaluate the shifted planes at x = v_x t.
    auto p_at = [&](double yy, double tt) {
        const FieldEval fe = eval_field(cfg, vx * tt, yy, pc);
        if (fe.R < eps_R(cfg, vx * tt, pc))
            throw NodeProximityError("continuity_residual: stencil crosses a node");
        return fe.R * fe.R;
    };
    auto flux_at = [&](double yy) {
        const FieldEval fe = eval_field(cfg, x, yy, pc);
        if (fe.R < eps_R(cfg, x, pc))
            throw NodeProximityError("continuity_residual: stencil crosses a node");
        const double p2 = fe.R * fe.R;
        const double vy = pc.hbar / pc.m_e * std::imag(std::conj(fe.psi) * fe.dpsi_dy) / p2;
        return p2 * vy;
    };

    const double dpdt = (p_at(y, t0 + h_t) - p_at(y, t0 - h_t)) / (2.0 * h_t);
    const double dflux = (flux_at(y + h_y) - flux_at(y - h_y)) / (2.0 * h_y);
    const double p0 = p_at(y, t0);
    return std::fabs(dpdt + dflux) * t0 / p0;
}

}  // namespace bohmrad::wavefield
