#pragma once

#include <functional>
#include <vector>

// In-house 1-D quadrature kit: a Gauss-Kronrod 15(7) adaptive integrator for
// smooth integrands and helpers for the oscillatory Fourier-type integrals in
// the radiation chain.

namespace bohmrad::quad {

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;   // absolute error estimate
    bool converged = false;
    int evaluations = 0;
};

// Fixed 15-point Gauss-Kronrod panel on [a, b]; err receives |K15 - G7|.
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* err);

// Globally adaptive bisection on [a, b] until the summed error estimate is
// below max(abs_tol, rel_tol*|I|) or max_intervals is exhausted.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_intervals = 4000);

// Limit of a sequence of partial sums by an iterated Aitken delta-squared
// table; intended for alternating half-period sums of oscillatory integrals.
double aitken_limit(const std::vector<double>& partial_sums);

// integral_0^inf cos(phase(y)) dy for a strictly increasing phase with
// phase(0) = 0 and phase -> inf. Integrates half-period panels located by
// root-finding on the phase and feeds the alternating partial sums through
// aitken_limit. rel_tol controls the acceleration stopping test.
double cosine_oscillatory(const std::function<double(double)>& phase,
                          const std::function<double(double)>& phase_deriv,
                          double rel_tol = 1e-9, int max_half_periods = 400);

}  // namespace bohmrad::quad
