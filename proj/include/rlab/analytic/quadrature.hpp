#pragma once

#include <functional>
#include <stdexcept>

namespace rlab {

using RealFn = std::function<double(double)>;

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_intervals = 2000;
};

// Globally adaptive Gauss-Kronrod (15-point rule, bisection of the worst
// interval). Throws QuadratureError when the interval cap is hit before the
// summed error estimate falls below abs_tol.
double integrate(const RealFn& f, double a, double b, QuadratureOptions opt = {});

// Integral over [a, inf) via z = a + u/(1-u).
double integrate_to_infinity(const RealFn& f, double a, QuadratureOptions opt = {});

// Integral over [a, b] of an integrand with an (s-a)^(-1/2) singularity,
// via s = a + u^2.
double integrate_sqrt_singular(const RealFn& f, double a, double b, QuadratureOptions opt = {});

// Integral over [a, inf), a > 0, for integrands decaying like z^(-3/2) or
// faster, via z = a/s^2.
double integrate_power_tail(const RealFn& f, double a, QuadratureOptions opt = {});

// Same on [a, inf).
double integrate_sqrt_singular_to_infinity(const RealFn& f, double a, QuadratureOptions opt = {});

}  // namespace rlab
