#include "rlab/pde/halfplane.hpp"

#include <cmath>
#include <stdexcept>

#include "rlab/analytic/resolvent.hpp"

namespace rlab {

double halfplane_multiplier(HalfPlaneProblem problem, double xi, double y, double r) {
  if (!(y >= 0.0)) throw std::domain_error("halfplane_multiplier: y must be >= 0");
  if (!(r >= 0.0)) throw std::domain_error("halfplane_multiplier: r must be >= 0");
  const double x2 = xi * xi;
  const double a = std::sqrt(x2 + r);
  if (problem == HalfPlaneProblem::P1) {
    if (x2 + r == 0.0) return 1.0;
    return x2 / (x2 + r) * std::exp(-y * a) + r / (x2 + r);
  }
  return std::exp(-y * (a - std::sqrt(r)));
}

double boundary_symbol(HalfPlaneProblem problem, double xi, double r) {
  if (!(r >= 0.0)) throw std::domain_error("boundary_symbol: r must be >= 0");
  const double x2 = xi * xi;
  const double a = std::sqrt(x2 + r);
  if (problem == HalfPlaneProblem::P1) return a == 0.0 ? 0.0 : -x2 / a;
  const double k = a - std::sqrt(r);
  return -k + marchaud_exponential(k, r);
}

double boundary_symbol_p2_quadrature(double xi, double r) {
  const double k = std::sqrt(xi * xi + r) - std::sqrt(r);
  return -k + marchaud_apply([k](double y) { return std::exp(-k * y); }, 0.0, r);
}

}  // namespace rlab
