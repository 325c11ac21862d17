#include "rlab/analytic/exponents.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rlab/analytic/quadrature.hpp"

namespace rlab {

namespace {

void require_lambda(double lambda, const char* fn) {
  if (!(lambda > 0.0)) throw std::domain_error(std::string(fn) + ": lambda must be > 0");
}

void require_r(double r, const char* fn) {
  if (!(r >= 0.0)) throw std::domain_error(std::string(fn) + ": r must be >= 0");
}

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

}  // namespace

double phi(double lambda, double r) {
  require_lambda(lambda, "phi");
  require_r(r, "phi");
  return lambda / std::sqrt(lambda + r);
}

double psi(double lambda, double r) {
  require_lambda(lambda, "psi");
  require_r(r, "psi");
  const double s = std::sqrt(r);
  // lambda + s - r/(lambda+s) = lambda (lambda + 2s)/(lambda + s), free of cancellation.
  return lambda * (lambda + 2.0 * s) / (lambda + s);
}

double psi_phi_identity_residual(double lambda, double r) {
  const double target = phi(lambda, r);
  // sqrt(l+r) - sqrt(r) written without cancellation.
  const double shift = lambda / (std::sqrt(lambda + r) + std::sqrt(r));
  return std::abs(psi(shift, r) - target) / target;
}

double LaplaceExponent::operator()(double lambda) const {
  require_lambda(lambda, "LaplaceExponent");
  require_r(r, "LaplaceExponent");
  switch (kind) {
    case ExponentKind::Phi:
      return phi(lambda, r);
    case ExponentKind::Psi:
      return psi(lambda, r);
    case ExponentKind::HalfStable:
      return std::sqrt(lambda);
    case ExponentKind::DriftedBM:
      return lambda / (std::sqrt(lambda + r) + std::sqrt(r));
  }
  return 0.0;
}

double LaplaceExponent::drift() const { return kind == ExponentKind::Psi ? 1.0 : 0.0; }

double LaplaceExponent::levy_tail(double z) const {
  if (!(z > 0.0)) throw std::domain_error("levy_tail: z must be > 0");
  switch (kind) {
    case ExponentKind::Phi:
      return std::exp(-r * z) * kInvSqrtPi / std::sqrt(z);
    case ExponentKind::Psi:
      return std::sqrt(r) * std::exp(-std::sqrt(r) * z);
    case ExponentKind::HalfStable:
      return kInvSqrtPi / std::sqrt(z);
    case ExponentKind::DriftedBM:
      return std::exp(-r * z) * kInvSqrtPi / std::sqrt(z) - std::sqrt(r) * std::erfc(std::sqrt(r * z));
  }
  return 0.0;
}

BernsteinReport check_bernstein(const LaplaceExponent& e, const std::vector<double>& lambdas) {
  BernsteinReport rep;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (double l : lambdas) {
    const double h = l * 1e-5;
    const double f0 = e(l);
    const double fp = e(l + h);
    const double fm = e(l - h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double floor2 = 16.0 * eps * std::abs(f0) / (h * h);
    rep.min_value = std::min(rep.min_value, f0);
    rep.min_first = std::min(rep.min_first, d1);
    rep.max_second = std::max(rep.max_second, d2);
    if (f0 < 0.0 || d1 < 0.0 || d2 > floor2) rep.ok = false;
  }
  return rep;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  return g;
}

double LevyMeasure::density(double z) const {
  if (!(z > 0.0)) throw std::domain_error("levy density: z must be > 0");
  require_r(r, "levy density");
  if (kind == LevyKind::PiPsi) return r * std::exp(-std::sqrt(r) * z);
  return std::exp(-r * z) * (2.0 * r * z + 1.0) * 0.5 * kInvSqrtPi / (z * std::sqrt(z));
}

double LevyMeasure::tail(double z) const {
  if (!(z > 0.0)) throw std::domain_error("levy tail: z must be > 0");
  require_r(r, "levy tail");
  if (kind == LevyKind::PiPsi) return std::sqrt(r) * std::exp(-std::sqrt(r) * z);
  return std::exp(-r * z) * kInvSqrtPi / std::sqrt(z);
}

double LevyMeasure::total_mass() const {
  return kind == LevyKind::PiPsi ? std::sqrt(r) : std::numeric_limits<double>::infinity();
}

double levy_khintchine(const LevyMeasure& m, double drift, double lambda) {
  require_lambda(lambda, "levy_khintchine");
  const RealFn integrand = [&](double z) { return z > 0.0 ? -std::expm1(-lambda * z) * m.density(z) : 0.0; };
  double jumps = 0.0;
  if (m.kind == LevyKind::PiPsi) {
    if (m.r > 0.0) jumps = integrate_to_infinity(integrand, 0.0);
  } else {
    // (1 - e^{-lz}) z^{-3/2} ~ l z^{-1/2} near 0.
    jumps = integrate_sqrt_singular(integrand, 0.0, 1.0) + integrate_power_tail(integrand, 1.0);
  }
  return drift * lambda + jumps;
}

double tail_symbol_residual(const LaplaceExponent& e, double lambda) {
  require_lambda(lambda, "tail_symbol_residual");
  const RealFn integrand = [&](double z) { return z > 0.0 ? std::exp(-lambda * z) * e.levy_tail(z) : 0.0; };
  double integral = 0.0;
  if (e.kind == ExponentKind::Psi) {
    if (e.r > 0.0) integral = integrate_to_infinity(integrand, 0.0);
  } else {
    integral = integrate_sqrt_singular(integrand, 0.0, 1.0) + integrate_to_infinity(integrand, 1.0);
  }
  return std::abs(e(lambda) / lambda - e.drift() - integral);
}

double inverse_subordinator_laplace(const LaplaceExponent& e, double lambda, double x) {
  const double v = e(lambda);
  return v / lambda * std::exp(-x * v);
}

double inverse_local_time_laplace(double lambda, double x, double r) {
  if (!(x >= 0.0)) throw std::domain_error("inverse_local_time_laplace: x must be >= 0");
  return std::exp(-x * phi(lambda, r));
}

double hitting_time_laplace(double lambda, double x, double r) {
  require_lambda(lambda, "hitting_time_laplace");
  require_r(r, "hitting_time_laplace");
  if (!(x >= 0.0)) throw std::domain_error("hitting_time_laplace: x must be >= 0");
  return std::exp(-x * lambda / (std::sqrt(lambda + r) + std::sqrt(r)));
}

}  // namespace rlab
