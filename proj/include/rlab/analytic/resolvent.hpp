#pragma once

#include "rlab/analytic/quadrature.hpp"

namespace rlab {

// Resolvent of BM with drift -2 sqrt(r) killed at 0:
// int_0^inf K(x,y) f(y) dy with
// 2a K = e^{-(a-b)(x-y)} 1{y<x} + e^{-(a+b)(y-x)} 1{y>x} - e^{-(a-b)x - (a+b)y},
// a = sqrt(lambda+r), b = sqrt(r).
double resolvent_dirichlet(const RealFn& f, double x, double lambda, double r);

// R_lambda f(0) for the process with the non-local boundary condition.
double resolvent_at_zero(const RealFn& f, double lambda, double r);

// R^D f(x) + e^{-x(a-b)} R f(0).
double resolvent_full(const RealFn& f, double x, double lambda, double r);

// u'(0) + D^Psi u(0) for u = resolvent_full(f, ., lambda, r); u'(0) by a
// one-sided fourth-order difference.
double resolvent_boundary_residual(const RealFn& f, double lambda, double r);

// Fourier symbol of the Dirichlet-to-Neumann map: -xi^2/sqrt(xi^2+r).
double dn_symbol(double xi, double r);

// int_0^inf (f(x+y) - f(x)) r e^{-sqrt(r) y} dy by quadrature.
double marchaud_apply(const RealFn& f, double x, double r);

// The same operator on e^{-k y}, at x = 0, in closed form:
// r/(k + sqrt(r)) - sqrt(r).
double marchaud_exponential(double k, double r);

}  // namespace rlab
