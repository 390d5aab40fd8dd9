#include "bohmrad/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <thread>

#include "bohmrad/quadrature.hpp"
#include "bohmrad/rng.hpp"

namespace bohmrad::dynamics {

namespace {

// --- Cash-Karp 5(4) embedded pair -----------------------------------------

template <size_t N>
using State = std::array<double, N>;

template <size_t N>
void rkck(const std::function<State<N>(double, const State<N>&)>& deriv, double t,
          const State<N>& y, const State<N>& k1, double h, State<N>* y_out,
          State<N>* y_err) {
    constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    constexpr double b21 = 0.2;
    constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0, b54 = 35.0 / 27.0;
    constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0, b63 = 575.0 / 13824.0,
                     b64 = 44275.0 / 110592.0, b65 = 253.0 / 4096.0;
    constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                     c6 = 512.0 / 1771.0;
    constexpr double dc1 = c1 - 2825.0 / 27648.0, dc3 = c3 - 18575.0 / 48384.0,
                     dc4 = c4 - 13525.0 / 55296.0, dc5 = -277.0 / 14336.0,
                     dc6 = c6 - 0.25;

    State<N> tmp;
    for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * b21 * k1[i];
    const State<N> k2 = deriv(t + a2 * h, tmp);
    for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
    const State<N> k3 = deriv(t + a3 * h, tmp);
    for (size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
    const State<N> k4 = deriv(t + a4 * h, tmp);
    for (size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
    const State<N> k5 = deriv(t + a5 * h, tmp);
    for (size_t i = 0; i < N; ++i)
        tmp[i] = y[i] +
                 h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] + b65 * k5[i]);
    const State<N> k6 = deriv(t + a6 * h, tmp);

    for (size_t i = 0; i < N; ++i) {
        (*y_out)[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
        (*y_err)[i] = h * (dc1 * k1[i] + dc3 * k3[i] + dc4 * k4[i] + dc5 * k5[i] +
                           dc6 * k6[i]);
    }
}

constexpr double kSafety = 0.9;
constexpr double kGrowExp = -0.2;
constexpr double kShrinkExp = -0.25;
constexpr double kErrCon = 1.89e-4;

// --- guidance trajectory core ---------------------------------------------

struct StepObserver {
    // called once per accepted step (and for the launch point)
    std::function<void(double t, double y, double v)> on_sample;
};

TrajectoryStatus guided_path(const ExperimentConfig& cfg, double y0, double t0,
                             const IntegratorOptions& opts, const StepObserver& obs,
                             const PhysicalConstants& pc) {
    const double t_end = cfg.transit_time();
    const double dt_min = opts.dt_min_fraction * t_end;
    const double dt_max = opts.dt_max > 0.0 ? opts.dt_max : t_end / 64.0;

    auto deriv = [&](double t, const State<1>& s) -> State<1> {
        return {guidance_velocity(cfg, cfg.v_x * t, s[0], pc)};
    };

    double t = t0;
    State<1> y{y0};
    try {
        State<1> k1 = deriv(t, y);
        obs.on_sample(t, y[0], k1[0]);

        double h = std::min(dt_max, (t_end - t0) / 128.0);
        while (t < t_end) {
            if (t + h > t_end) h = t_end - t;

            State<1> y_new, y_err;
            rkck<1>(deriv, t, y, k1, h, &y_new, &y_err);
            const double yscal = std::fabs(y[0]) + std::fabs(h * k1[0]) + cfg.b;
            const double errmax = std::fabs(y_err[0]) / (yscal * opts.rel_tol);

            if (errmax > 1.0) {
                const double h_try = kSafety * h * std::pow(errmax, kShrinkExp);
                h = std::max(h_try, 0.1 * h);
                if (h < dt_min) return TrajectoryStatus::step_collapse;
                continue;
            }

            t += h;
            y = y_new;
            k1 = deriv(t, y);
            obs.on_sample(t, y[0], k1[0]);

            h = (errmax > kErrCon) ? kSafety * h * std::pow(errmax, kGrowExp) : 5.0 * h;
            h = std::min(h, dt_max);
        }
    } catch (const wavefield::NodeProximityError&) {
        return TrajectoryStatus::node_collision;
    }
    return TrajectoryStatus::ok;
}

// watches a path for sign changes against the canyon rays |n| <= n_rays
struct RayCrossingDetector {
    const ExperimentConfig* cfg;
    const PhysicalConstants* pc;
    int n_rays;
    std::vector<double> thetas;  // for n = 1..n_rays
    bool have_prev = false;
    double t_prev = 0.0, x_prev = 0.0, y_prev = 0.0;
    std::vector<CanyonCrossing>* out;

    RayCrossingDetector(const ExperimentConfig& c, int rays,
                        std::vector<CanyonCrossing>* sink, const PhysicalConstants& p)
        : cfg(&c), pc(&p), n_rays(rays), out(sink) {
        for (int n = 1; n <= rays; ++n)
            thetas.push_back(qpotential::canyon_angle(c, n, p));
    }

    void observe(double t, double y, double /*v*/) {
        const double x = cfg->v_x * t;
        if (have_prev) {
            for (int n = 1; n <= n_rays; ++n) {
                for (int sign : {+1, -1}) {
                    const double th = sign * thetas[n - 1];
                    const double s0 = y_prev - th * x_prev;
                    const double s1 = y - th * x;
                    if ((s0 > 0.0) != (s1 > 0.0) && s0 != s1) {
                        const double alpha = s0 / (s0 - s1);
                        out->push_back({t_prev + alpha * (t - t_prev),
                                        x_prev + alpha * (x - x_prev),
                                        y_prev + alpha * (y - y_prev), sign * n});
                    }
                }
            }
        }
        t_prev = t;
        x_prev = x;
        y_prev = y;
        have_prev = true;
    }
};

}  // namespace

double launch_time(const ExperimentConfig& cfg, const PhysicalConstants& pc) {
    // pick t0 with (b^2/2)[(1+t0/T)^2 + (hbar t0/(m b^2))^2] = b^2, so the
    // transported aperture density is the sigma = b mixture
    const double t_b = pc.m_e * cfg.b * cfg.b / pc.hbar;  // packet spreading time
    const double eps = t_b / cfg.T;
    const double u = (-eps + std::sqrt(1.0 + 2.0 * eps * eps)) / (1.0 + eps * eps);
    return u * t_b;
}

Trajectory integrate_trajectory(const ExperimentConfig& cfg, double y0, double dt_max,
                                const PhysicalConstants& pc) {
    IntegratorOptions opts;
    opts.dt_max = dt_max;

    Trajectory traj;
    traj.slit_of_origin = y0 >= 0.0 ? wavefield::Slit::A : wavefield::Slit::B;

    StepObserver obs;
    obs.on_sample = [&](double t, double y, double v) {
        traj.samples.push_back({t, cfg.v_x * t, y, v, 0.0});
    };
    traj.status = guided_path(cfg, y0, launch_time(cfg, pc), opts, obs, pc);

    // acceleration from the recorded velocity sequence
    auto& s = traj.samples;
    if (s.size() >= 2) {
        for (size_t i = 0; i < s.size(); ++i) {
            const size_t lo = (i == 0) ? 0 : i - 1;
            const size_t hi = (i + 1 == s.size()) ? i : i + 1;
            const double dt = s[hi].t - s[lo].t;
            s[i].a_y = dt > 0.0 ? (s[hi].v_y - s[lo].v_y) / dt : 0.0;
        }
    }
    return traj;
}

double sample_y_at(const Trajectory& traj, double x) {
    const auto& s = traj.samples;
    if (s.empty()) throw std::runtime_error("sample_y_at: empty trajectory");
    if (x <= s.front().x) return s.front().y;
    if (x >= s.back().x) return s.back().y;
    auto it = std::lower_bound(s.begin(), s.end(), x,
                               [](const TrajectorySample& a, double v) { return a.x < v; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (x - lo.x) / (hi.x - lo.x);
    return lo.y + w * (hi.y - lo.y);
}

HistogramSpec default_histogram(const ExperimentConfig& cfg, const PhysicalConstants& pc) {
    const double f = wavefield::fringe_spacing(cfg, cfg.screen_x, pc);
    const double bin = f / 8.0;
    const int n_bins = 57;
    const double left = -3.5 * f - f / 16.0;
    HistogramSpec spec;
    spec.edges.reserve(n_bins + 1);
    for (int i = 0; i <= n_bins; ++i) spec.edges.push_back(left + bin * i);
    return spec;
}

EnsembleResult ensemble_run(const ExperimentConfig& cfg, std::int64_t n_samples,
                            std::uint64_t seed, const HistogramSpec& hist,
                            int collect_rays, const IntegratorOptions& opts,
                            const PhysicalConstants& pc) {
    if (n_samples < 1) throw std::invalid_argument("ensemble_run: n_samples >= 1");
    if (hist.edges.size() < 2)
        throw std::invalid_argument("ensemble_run: histogram needs >= 1 bin");

    const double t0 = launch_time(cfg, pc);
    const double center = cfg.a * (1.0 + t0 / cfg.T);
    const size_t n_bins = hist.edges.size() - 1;
    const double left = hist.edges.front();
    const double bin_w = (hist.edges.back() - left) / static_cast<double>(n_bins);

    struct WorkerOut {
        std::vector<std::int64_t> counts;
        std::vector<double> landings;  // NaN marks an aborted trajectory
        std::vector<CanyonCrossing> crossings;
        std::int64_t aborted = 0;
        std::int64_t out_of_range = 0;
    };

    // fixed-size chunks merged in chunk order: the result layout depends only
    // on (n_samples, seed), not on the machine's thread count
    constexpr std::int64_t kChunk = 4096;
    const std::int64_t n_chunks = (n_samples + kChunk - 1) / kChunk;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::int64_t>(hw, n_chunks));
    std::vector<WorkerOut> outs(n_chunks);
    std::vector<std::thread> pool;

    auto work = [&](std::int64_t chunk_idx) {
        WorkerOut& out = outs[chunk_idx];
        const std::int64_t lo = chunk_idx * kChunk;
        const std::int64_t hi = std::min(n_samples, lo + kChunk);
        out.counts.assign(n_bins, 0);
        out.landings.reserve(hi - lo);
        for (std::int64_t i = lo; i < hi; ++i) {
            SplitMix64 rng = rng_stream(seed, static_cast<std::uint64_t>(i));
            const double slit_sign = (rng.next() & 1u) ? 1.0 : -1.0;
            const double y0 = slit_sign * center + cfg.b * rng.normal();

            double landing = 0.0;
            RayCrossingDetector detect(cfg, collect_rays, &out.crossings, pc);
            StepObserver obs;
            obs.on_sample = [&](double t, double y, double v) {
                landing = y;
                if (collect_rays > 0) detect.observe(t, y, v);
            };
            const TrajectoryStatus st = guided_path(cfg, y0, t0, opts, obs, pc);

            if (st != TrajectoryStatus::ok) {
                ++out.aborted;
                out.landings.push_back(std::nan(""));
                continue;
            }
            out.landings.push_back(landing);
            const double pos = (landing - left) / bin_w;
            if (pos >= 0.0 && pos < static_cast<double>(n_bins)) {
                ++out.counts[static_cast<size_t>(pos)];
            } else {
                ++out.out_of_range;
            }
        }
    };

    for (unsigned w = 0; w < n_workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::int64_t k = w; k < n_chunks; k += n_workers) work(k);
        });
    }
    for (auto& th : pool) th.join();

    EnsembleResult res;
    res.histogram.bin_edges = hist.edges;
    res.histogram.counts.assign(n_bins, 0);
    res.histogram.n_samples = n_samples;
    res.histogram.screen_x = cfg.screen_x;
    res.landings.reserve(n_samples);
    for (const WorkerOut& out : outs) {
        if (out.counts.empty()) continue;  // worker had no index range
        for (size_t b = 0; b < n_bins; ++b) res.histogram.counts[b] += out.counts[b];
        res.histogram.n_aborted += out.aborted;
        res.histogram.n_out_of_range += out.out_of_range;
        for (double v : out.landings)
            if (!std::isnan(v)) res.landings.push_back(v);
        res.crossings.insert(res.crossings.end(), out.crossings.begin(),
                             out.crossings.end());
    }

    if (res.histogram.n_aborted * 100 > n_samples)
        throw std::runtime_error("ensemble_run: more than 1% of trajectories aborted");
    return res;
}

LandingHistogram ensemble_landing(const ExperimentConfig& cfg, std::int64_t n_samples,
                                  std::uint64_t seed, const PhysicalConstants& pc) {
    return ensemble_run(cfg, n_samples, seed, default_histogram(cfg, pc), 0, {}, pc)
        .histogram;
}

double crossing_time_exact(const qpotential::CanyonModel& canyon, double y,
                           const PhysicalConstants& pc) {
    const double w = canyon.width_scale;
    const double abs_n = std::abs(canyon.n);
    // slope sqrt(3) |n|^{3/2} (m/hbar) b^2/a_hat, with b^2/a_hat = w/(2 sqrt 2)
    const double slope = std::sqrt(3.0) * std::pow(abs_n, 1.5) * pc.m_e / pc.hbar * w /
                         (2.0 * std::sqrt(2.0));
    const double kappa_p = 1.0 / (std::sqrt(2.0) * w);  // exact-map exponent scale

    const double ay = std::fabs(y);
    if (kappa_p * ay * (kappa_p * ay) > 700.0)
        throw std::domain_error("crossing_time_exact: integrand exponent exceeds 700");
    if (ay == 0.0) return 0.0;

    const auto res = quad::integrate(
        [&](double u) { return std::exp(kappa_p * u * (kappa_p * u)); }, 0.0, ay, 1e-12);
    return std::copysign(slope * res.value, y);
}

double crossing_time_sinh(const qpotential::CanyonModel& canyon, double y) {
    const double kappa = 3.0 / std::sqrt(2.0) / canyon.width_scale;  // 3 a_hat/(4 b^2)
    return canyon.tau_n * std::sinh(kappa * y);
}

std::vector<ReducedState> reduced_crossing(const qpotential::CanyonModel& canyon,
                                           double y_end, int n_outputs,
                                           const PhysicalConstants& pc) {
    if (!(y_end > 0.0)) throw std::domain_error("reduced_crossing: y_end > 0");

    auto deriv = [&](double /*t*/, const State<2>& s) -> State<2> {
        return {s[1], -qpotential::q1d_derivative(canyon, s[0]) / pc.m_e};
    };

    std::vector<ReducedState> all;
    double t = 0.0;
    State<2> s{0.0, std::sqrt(2.0 * canyon.depth / pc.m_e)};
    all.push_back({t, s[0], s[1]});

    const double v_scale = s[1];
    double h = 0.01 * canyon.width_scale / v_scale;
    const double rel_tol = 1e-10;
    int guard = 0;
    while (s[0] < y_end && ++guard < 2000000) {
        State<2> k1 = deriv(t, s);
        State<2> s_new, s_err;
        rkck<2>(deriv, t, s, k1, h, &s_new, &s_err);
        double errmax = 0.0;
        const std::array<double, 2> scale{std::fabs(s[0]) + canyon.width_scale,
                                          std::fabs(s[1]) + v_scale};
        for (int i = 0; i < 2; ++i)
            errmax = std::max(errmax, std::fabs(s_err[i]) / (scale[i] * rel_tol));
        if (errmax > 1.0) {
            h = std::max(kSafety * h * std::pow(errmax, kShrinkExp), 0.1 * h);
            continue;
        }
        t += h;
        s = s_new;
        all.push_back({t, s[0], s[1]});
        h = (errmax > kErrCon) ? kSafety * h * std::pow(errmax, kGrowExp) : 5.0 * h;
    }

    if (n_outputs <= 0 || static_cast<size_t>(n_outputs) >= all.size()) return all;
    std::vector<ReducedState> out;
    out.reserve(n_outputs);
    for (int i = 0; i < n_outputs; ++i) {
        const size_t idx = static_cast<size_t>(
            std::llround(static_cast<double>(i) * (all.size() - 1) / (n_outputs - 1.0)));
        out.push_back(all[idx]);
    }
    return out;
}

}  // namespace bohmrad::dynamics
