#include "rlab/analytic/resolvent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rlab/analytic/exponents.hpp"

namespace rlab {

namespace {

void require_args(double lambda, double r, const char* fn) {
  if (!(lambda > 0.0)) throw std::domain_error(std::string(fn) + ": lambda must be > 0");
  if (!(r >= 0.0)) throw std::domain_error(std::string(fn) + ": r must be >= 0");
}

}  // namespace

double resolvent_dirichlet(const RealFn& f, double x, double lambda, double r) {
  require_args(lambda, r, "resolvent_dirichlet");
  if (!(x >= 0.0)) throw std::domain_error("resolvent_dirichlet: x must be >= 0");
  if (x == 0.0) return 0.0;
  const double a = std::sqrt(lambda + r);
  const double b = std::sqrt(r);
  const double am = lambda / (a + b);  // a - b
  const double ap = a + b;
  const double i1 = integrate([&](double y) { return std::exp(-am * (x - y)) * f(y); }, 0.0, x);
  const double i2 = integrate_to_infinity([&](double y) { return std::exp(-ap * (y - x)) * f(y); }, x);
  const double i3 =
      std::exp(-am * x) * integrate_to_infinity([&](double y) { return std::exp(-ap * y) * f(y); }, 0.0);
  return (i1 + i2 - i3) / (2.0 * a);
}

double resolvent_at_zero(const RealFn& f, double lambda, double r) {
  require_args(lambda, r, "resolvent_at_zero");
  const double a = std::sqrt(lambda + r);
  const double b = std::sqrt(r);
  const double direct = integrate_to_infinity([&](double y) { return std::exp(-(a + b) * y) * f(y); }, 0.0);
  double jumps = 0.0;
  if (r > 0.0) {
    jumps = integrate_to_infinity(
        [&](double l) { return resolvent_dirichlet(f, l, lambda, r) * r * std::exp(-b * l); }, 0.0);
  }
  return (direct + jumps) / psi(lambda / (a + b), r);
}

double resolvent_full(const RealFn& f, double x, double lambda, double r) {
  require_args(lambda, r, "resolvent_full");
  const double shift = lambda / (std::sqrt(lambda + r) + std::sqrt(r));
  return resolvent_dirichlet(f, x, lambda, r) + std::exp(-x * shift) * resolvent_at_zero(f, lambda, r);
}

double resolvent_boundary_residual(const RealFn& f, double lambda, double r) {
  require_args(lambda, r, "resolvent_boundary_residual");
  const double r0 = resolvent_at_zero(f, lambda, r);
  const double shift = lambda / (std::sqrt(lambda + r) + std::sqrt(r));
  const auto u = [&](double x) {
    return x == 0.0 ? r0 : resolvent_dirichlet(f, x, lambda, r) + std::exp(-x * shift) * r0;
  };
  const double h = 5e-3;
  const double du = (-25.0 * u(0.0) + 48.0 * u(h) - 36.0 * u(2 * h) + 16.0 * u(3 * h) - 3.0 * u(4 * h)) / (12.0 * h);
  return du + marchaud_apply(u, 0.0, r);
}

double dn_symbol(double xi, double r) {
  if (!(r >= 0.0)) throw std::domain_error("dn_symbol: r must be >= 0");
  const double x2 = xi * xi;
  if (x2 == 0.0) return 0.0;
  return -x2 / std::sqrt(x2 + r);
}

double marchaud_apply(const RealFn& f, double x, double r) {
  if (!(r >= 0.0)) throw std::domain_error("marchaud_apply: r must be >= 0");
  if (r == 0.0) return 0.0;
  const double b = std::sqrt(r);
  const double fx = f(x);
  return integrate_to_infinity([&](double y) { return (f(x + y) - fx) * r * std::exp(-b * y); }, 0.0);
}

double marchaud_exponential(double k, double r) {
  if (!(r >= 0.0)) throw std::domain_error("marchaud_exponential: r must be >= 0");
  if (r == 0.0) return 0.0;
  const double b = std::sqrt(r);
  return r / (k + b) - b;
}

}  // namespace rlab
