#include "bohmrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohmrad::quad {

namespace {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, err;
};

}  // namespace

double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err) {
    const double hl = 0.5 * (b - a);
    const double ctr = 0.5 * (a + b);

    const double fc = f(ctr);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        const double fsum = f(ctr - dx) + f(ctr + dx);
        res_k += kWgk[j] * fsum;
        if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
    }
    res_k *= hl;
    res_g *= hl;
    if (err) *err = std::fabs(res_k - res_g);
    return res_k;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_intervals) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::vector<Interval> stack;
    double err0;
    double v0 = gk15_panel(f, a, b, &err0);
    out.evaluations = 15;
    stack.push_back({a, b, v0, err0});

    double total = v0, total_err = err0;
    while (static_cast<int>(stack.size()) < max_intervals) {
        const double tol = std::max(abs_tol, rel_tol * std::fabs(total));
        if (total_err <= tol) break;

        // split the interval with the largest error estimate
        auto worst = std::max_element(
            stack.begin(), stack.end(),
            [](const Interval& p, const Interval& q) { return p.err < q.err; });
        const Interval iv = *worst;
        stack.erase(worst);

        const double mid = 0.5 * (iv.a + iv.b);
        double e1, e2;
        const double v1 = gk15_panel(f, iv.a, mid, &e1);
        const double v2 = gk15_panel(f, mid, iv.b, &e2);
        out.evaluations += 30;
        stack.push_back({iv.a, mid, v1, e1});
        stack.push_back({mid, iv.b, v2, e2});

        total = 0.0;
        total_err = 0.0;
        for (const Interval& s : stack) {
            total += s.value;
            total_err += s.err;
        }
        if (mid == iv.a || mid == iv.b) break;  // interval exhausted in double
    }

    out.value = total;
    out.est_error = total_err;
    out.converged = total_err <= std::max(abs_tol, rel_tol * std::fabs(total));
    return out;
}

double aitken_limit(const std::vector<double>& partial_sums) {
    std::vector<double> a = partial_sums;
    if (a.size() < 3) return a.empty() ? 0.0 : a.back();
    while (a.size() >= 3) {
        std::vector<double> next;
        next.reserve(a.size() - 2);
        for (size_t i = 0; i + 2 < a.size(); ++i) {
            const double den = a[i + 2] - 2.0 * a[i + 1] + a[i];
            if (std::fabs(den) < 1e-300) {
                next.push_back(a[i + 2]);
            } else {
                const double d = a[i + 2] - a[i + 1];
                next.push_back(a[i + 2] - d * d / den);
            }
        }
        a.swap(next);
    }
    return a.back();
}

double cosine_oscillatory(const std::function<double(double)>& phase,
                          const std::function<double(double)>& phase_deriv,
                          double rel_tol, int max_half_periods) {
    std::vector<double> partial;
    partial.reserve(64);

    double y_lo = 0.0;
    double sum = 0.0;
    double prev_limit = 0.0;
    bool have_prev = false;

    for (int k = 1; k <= max_half_periods; ++k) {
        const double target = M_PI * k;

        // bracket the phase crossing, then bisection with Newton acceleration;
        // every iteration is guaranteed to at least halve the bracket
        double y_hi = y_lo;
        double step = M_PI / std::max(phase_deriv(y_lo), 1e-300);
        while (phase(y_hi) < target) {
            y_hi += step;
            step *= 1.6;
            if (!(y_hi < 1e300)) throw std::runtime_error("cosine_oscillatory: phase never reaches target");
        }
        double lo = y_lo, hi = y_hi;
        while (hi - lo > 1e-15 * (std::fabs(hi) + 1e-300)) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (phase(mid) > target) hi = mid; else lo = mid;
        }
        const double y = 0.5 * (lo + hi);

        double perr;
        sum += gk15_panel([&](double u) { return std::cos(phase(u)); }, y_lo, y, &perr);
        partial.push_back(sum);
        y_lo = y;

        if (k >= 8 && k % 2 == 0) {
            const double limit = aitken_limit(partial);
            if (have_prev &&
                std::fabs(limit - prev_limit) <= rel_tol * (std::fabs(limit) + 1e-300)) {
                return limit;
            }
            prev_limit = limit;
            have_prev = true;
        }
    }
    return aitken_limit(partial);
}

}  // namespace bohmrad::quad
