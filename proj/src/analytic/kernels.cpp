#include "rlab/analytic/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rlab/analytic/quadrature.hpp"

namespace rlab {

namespace {

void require_positive(double v, const char* name, const char* fn) {
  if (!(v > 0.0)) throw std::domain_error(std::string(fn) + ": " + name + " must be > 0");
}

void require_nonneg(double v, const char* name, const char* fn) {
  if (!(v >= 0.0)) throw std::domain_error(std::string(fn) + ": " + name + " must be >= 0");
}

// int_0^t r e^{-rs} g(s, z) ds, with s = u^2 to absorb the s^{-1/2} at 0.
double reset_integral(double t, double z, double r) {
  if (r == 0.0) return 0.0;
  const double c = 2.0 * r / std::sqrt(4.0 * std::numbers::pi);
  const double z2 = z * z;
  return integrate(
      [&](double u) {
        const double s = u * u;
        return c * std::exp(-r * s - z2 / (4.0 * s));
      },
      0.0, std::sqrt(t));
}

}  // namespace

double heat_kernel(double t, double z) {
  require_positive(t, "t", "heat_kernel");
  return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * std::numbers::pi * t);
}

double heat_kernel_laplace(double lambda, double x) {
  require_positive(lambda, "lambda", "heat_kernel_laplace");
  const double s = std::sqrt(lambda);
  return 0.5 * std::exp(-std::abs(x) * s) / s;
}

double first_passage_laplace_kernel(double lambda, double x) {
  require_positive(lambda, "lambda", "first_passage_laplace_kernel");
  return std::exp(-std::abs(x) * std::sqrt(lambda));
}

double reflected_bm_density(double t, double x, double y) {
  require_positive(t, "t", "reflected_bm_density");
  require_nonneg(x, "x", "reflected_bm_density");
  require_nonneg(y, "y", "reflected_bm_density");
  return heat_kernel(t, x + y) + heat_kernel(t, y - x);
}

double resetting_density_free(double t, double x, double x_r, double y, double r) {
  require_positive(t, "t", "resetting_density_free");
  require_nonneg(r, "r", "resetting_density_free");
  return std::exp(-r * t) * heat_kernel(t, y - x) + reset_integral(t, y - x_r, r);
}

double resetting_density_reflected(double t, double x, double y, double r) {
  require_positive(t, "t", "resetting_density_reflected");
  require_nonneg(x, "x", "resetting_density_reflected");
  require_nonneg(y, "y", "resetting_density_reflected");
  require_nonneg(r, "r", "resetting_density_reflected");
  return std::exp(-r * t) * (heat_kernel(t, x + y) + heat_kernel(t, y - x)) + 2.0 * reset_integral(t, y, r);
}

double stationary_density_free(double y, double r) {
  require_positive(r, "r", "stationary_density_free");
  const double s = std::sqrt(r);
  return 0.5 * s * std::exp(-s * std::abs(y));
}

double stationary_density_halfline(double y, double r) {
  require_positive(r, "r", "stationary_density_halfline");
  require_nonneg(y, "y", "stationary_density_halfline");
  const double s = std::sqrt(r);
  return s * std::exp(-s * y);
}

double stationary_cdf_halfline(double y, double r) {
  require_positive(r, "r", "stationary_cdf_halfline");
  if (y <= 0.0) return 0.0;
  return -std::expm1(-std::sqrt(r) * y);
}

double drifted_reflected_density(double t, double x, double y, double r) {
  require_positive(t, "t", "drifted_reflected_density");
  require_nonneg(x, "x", "drifted_reflected_density");
  require_nonneg(y, "y", "drifted_reflected_density");
  require_nonneg(r, "r", "drifted_reflected_density");
  const double b = std::sqrt(r);
  const double local = heat_kernel(t, y - x) + heat_kernel(t, y + x);
  double tail = 0.0;
  if (r > 0.0) {
    // Exponent b*w - (w+c)^2/4t peaks at w + c = 2bt; cut 36.9 below the peak.
    const double c = x + y;
    const double w_peak = std::max(0.0, 2.0 * b * t - c);
    const double w_max = w_peak + std::sqrt(4.0 * t * 16.0 * std::numbers::ln10) + 2.0 * std::sqrt(t);
    // Factor e^{-rt} e^{b(x-y)} moved inside so the integrand stays O(1).
    const double shift = -r * t + b * (x - y);
    const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * t);
    tail = 2.0 * b *
           integrate([&](double w) { return norm * std::exp(shift + b * w - (w + c) * (w + c) / (4.0 * t)); }, 0.0,
                     w_max);
  }
  return std::exp(-r * t + b * (x - y)) * local + tail;
}

double joint_laplace_drift(double lambda, double y, double w, double r) {
  require_positive(lambda, "lambda", "joint_laplace_drift");
  require_nonneg(r, "r", "joint_laplace_drift");
  return std::exp(-std::sqrt(r) * (y - w) - std::sqrt(lambda + r) * (y + w));
}

}  // namespace rlab
