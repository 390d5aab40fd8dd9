#pragma once

namespace bohmrad::specfun {

// Evaluation record for the modified Bessel functions of the second kind.
struct BesselEval {
    double x;
    double value;
    double est_error;      // relative error bound of the evaluation regime
    bool underflowed;      // x large enough that exp(-x) flushed to zero
};

// K0(x), K1(x) for x > 0. Power series with the -log(x/2)*I0(x) structure on
// x <= 2, Chebyshev expansions of the exponentially scaled function beyond.
// Relative error <= 1e-12 on [1e-6, 50]; throws std::domain_error for x <= 0.
BesselEval bessel_k0(double x);
BesselEval bessel_k1(double x);

// Convenience accessors returning just the value.
double k0(double x);
double k1(double x);

// Modified Bessel functions of the first kind (series / asymptotic), used by
// the small-argument K series and exposed for tests.
double i0(double x);
double i1(double x);

// Root of K0(x) = x*K1(x), i.e. the maximizer of x^2 K0^2(x). Bisection to
// absolute tolerance tol.
double k0_k1_crossing(double tol = 1e-12);

}  // namespace bohmrad::specfun
