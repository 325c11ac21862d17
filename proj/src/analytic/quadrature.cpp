#include "rlab/analytic/quadrature.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rlab {

namespace {

struct Piece {
  double a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece rule(const RealFn& f, double a, double b) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error);
  return {a, b, value, error};
}

}  // namespace

double integrate(const RealFn& f, double a, double b, QuadratureOptions opt) {
  if (a == b) return 0.0;
  if (!(std::isfinite(a) && std::isfinite(b))) throw QuadratureError("integrate: bounds must be finite");
  if (b < a) return -integrate(f, b, a, opt);

  std::priority_queue<Piece> pieces;
  pieces.push(rule(f, a, b));
  double value = pieces.top().value;
  double error = pieces.top().error;
  int intervals = 1;
  while (error > opt.abs_tol) {
    if (intervals >= opt.max_intervals) {
      throw QuadratureError("integrate: interval cap reached on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "], error estimate " + std::to_string(error));
    }
    const Piece worst = pieces.top();
    pieces.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = rule(f, worst.a, mid);
    const Piece right = rule(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    pieces.push(left);
    pieces.push(right);
    ++intervals;
    if (!std::isfinite(value)) throw QuadratureError("integrate: non-finite integrand");
    // Running sums drift; recompute once the estimate looks converged.
    if (error <= opt.abs_tol) {
      auto copy = pieces;
      value = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return value;
}

double integrate_to_infinity(const RealFn& f, double a, QuadratureOptions opt) {
  const RealFn g = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double w = 1.0 - u;
    return f(a + u / w) / (w * w);
  };
  return integrate(g, 0.0, 1.0, opt);
}

double integrate_sqrt_singular(const RealFn& f, double a, double b, QuadratureOptions opt) {
  if (b < a) return -integrate_sqrt_singular(f, b, a, opt);
  const RealFn g = [&](double u) { return u == 0.0 ? 0.0 : 2.0 * u * f(a + u * u); };
  return integrate(g, 0.0, std::sqrt(b - a), opt);
}

double integrate_power_tail(const RealFn& f, double a, QuadratureOptions opt) {
  if (!(a > 0.0)) throw QuadratureError("integrate_power_tail: a must be > 0");
  const RealFn g = [&](double s) { return s == 0.0 ? 0.0 : 2.0 * a * f(a / (s * s)) / (s * s * s); };
  return integrate(g, 0.0, 1.0, opt);
}

double integrate_sqrt_singular_to_infinity(const RealFn& f, double a, QuadratureOptions opt) {
  const RealFn g = [&](double u) { return u == 0.0 ? 0.0 : 2.0 * u * f(a + u * u); };
  return integrate_to_infinity(g, 0.0, opt);
}

}  // namespace rlab
