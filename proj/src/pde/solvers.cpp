#include "rlab/pde/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rlab/analytic/resolvent.hpp"

namespace rlab {

std::vector<std::string> validate_grid(const FDGrid& g, double r) {
  std::vector<std::string> errors;
  if (g.nx < 16) errors.emplace_back("nx must be >= 16");
  if (g.nt < 1) errors.emplace_back("nt must be >= 1");
  if (!(g.t_max > 0.0)) errors.emplace_back("t_max must be > 0");
  if (!(r >= 0.0)) errors.emplace_back("r must be ≥ 0");
  if (r > 0.0 && g.x_max < 6.0 / std::sqrt(r) * (1.0 - 1e-12)) errors.emplace_back("x_max must be >= 6/sqrt(r)");
  if (g.t_max > 0.0 && g.x_max < 6.0 * std::sqrt(2.0 * g.t_max) * (1.0 - 1e-12)) {
    errors.emplace_back("x_max must be >= 6 sqrt(2 t_max)");
  }
  return errors;
}

FDGrid default_grid(double r, double t_max, double dx, double dt) {
  double x_max = std::max(8.0, 6.0 * std::sqrt(2.0 * t_max));
  if (r > 0.0) x_max = std::max(x_max, 6.0 / std::sqrt(r));
  FDGrid g;
  g.nx = static_cast<int>(std::ceil(x_max / dx - 1e-9)) + 1;
  g.x_max = (g.nx - 1) * dx;
  g.nt = static_cast<int>(std::ceil(t_max / dt - 1e-9));
  g.t_max = t_max;
  return g;
}

double FDSolution::value(int n, double xq) const {
  const double h = grid.dx();
  const double pos = std::clamp(xq / h, 0.0, static_cast<double>(grid.nx - 1));
  const int i = std::min(static_cast<int>(pos), grid.nx - 2);
  const double w = pos - i;
  return (1.0 - w) * at(n, i) + w * at(n, i + 1);
}

double FDSolution::value_at(double tq, double xq) const {
  const double pos = std::clamp(tq / grid.dt(), 0.0, static_cast<double>(grid.nt));
  const int n = std::min(static_cast<int>(pos), grid.nt - 1);
  const double w = pos - n;
  if (grid.nt == 0) return value(0, xq);
  return (1.0 - w) * value(n, xq) + w * value(n + 1, xq);
}

namespace {

void require_grid(const FDGrid& g, double r) {
  const auto errors = validate_grid(g, r);
  if (errors.empty()) return;
  std::string msg = "invalid grid:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw std::invalid_argument(msg);
}

// Thomas algorithm; a[0] and c[n-1] unused.
std::vector<double> solve_tridiagonal(const std::vector<double>& a, const std::vector<double>& b,
                                      const std::vector<double>& c, std::vector<double> d) {
  const std::size_t n = b.size();
  std::vector<double> cp(n);
  double denom = b[0];
  if (denom == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
  cp[0] = c[0] / denom;
  d[0] /= denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = b[i] - a[i] * cp[i - 1];
    if (denom == 0.0 || !std::isfinite(denom)) throw std::runtime_error("tridiagonal solve: zero pivot");
    cp[i] = i + 1 < n ? c[i] / denom : 0.0;
    d[i] = (d[i] - a[i] * d[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) d[i] -= cp[i] * d[i + 1];
  return d;
}

// Tridiagonal part of the spatial operator (rows 0..N) as (lower, diag, upper).
struct Stencil {
  std::vector<double> lo, di, up;
};

std::vector<double> apply_stencil(const Stencil& s, const std::vector<double>& u) {
  const std::size_t n = u.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = s.di[i] * u[i];
    if (i > 0) v += s.lo[i] * u[i - 1];
    if (i + 1 < n) v += s.up[i] * u[i + 1];
    out[i] = v;
  }
  return out;
}

template <class Step>
FDSolution march(const RealFn& f, const FDGrid& grid, SolverOptions opt, std::string scheme, Step step) {
  FDSolution sol;
  sol.grid = grid;
  sol.scheme = std::move(scheme);
  const auto nx = static_cast<std::size_t>(grid.nx);
  sol.u.resize(static_cast<std::size_t>(grid.nt + 1) * nx);
  std::vector<double> u(nx);
  for (std::size_t i = 0; i < nx; ++i) u[i] = f(static_cast<double>(i) * grid.dx());
  std::copy(u.begin(), u.end(), sol.u.begin());
  const double k = grid.dt();
  for (int n = 0; n < grid.nt; ++n) {
    if (n < opt.startup_implicit_steps) {
      u = step(u, 1.0, 0.5 * k);
      u = step(u, 1.0, 0.5 * k);
    } else {
      u = step(u, opt.theta, k);
    }
    for (double v : u) {
      if (!std::isfinite(v)) throw std::runtime_error("finite-difference solution became non-finite");
    }
    std::copy(u.begin(), u.end(), sol.u.begin() + static_cast<long>((static_cast<std::size_t>(n) + 1) * nx));
  }
  std::ostringstream os;
  os << sol.scheme << " theta=" << opt.theta << " startup_be_steps=" << opt.startup_implicit_steps;
  sol.scheme = os.str();
  return sol;
}

}  // namespace

FDSolution solve_resetting_neumann(const RealFn& f, double r, const FDGrid& grid, SolverOptions opt) {
  require_grid(grid, r);
  const auto nx = static_cast<std::size_t>(grid.nx);
  const double h = grid.dx();
  const double ih2 = 1.0 / (h * h);
  // D2 - r I with ghost-point Neumann rows; the rank-one r u_0 term is
  // handled separately.
  Stencil a{std::vector<double>(nx, ih2), std::vector<double>(nx, -2.0 * ih2 - r), std::vector<double>(nx, ih2)};
  a.up[0] = 2.0 * ih2;
  a.lo[nx - 1] = 2.0 * ih2;

  const auto step = [&](const std::vector<double>& u, double theta, double k) {
    auto rhs = apply_stencil(a, u);
    for (std::size_t i = 0; i < nx; ++i) rhs[i] = u[i] + (1.0 - theta) * k * (rhs[i] + r * u[0]);
    std::vector<double> lo(nx), di(nx), up(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      lo[i] = -theta * k * a.lo[i];
      di[i] = 1.0 - theta * k * a.di[i];
      up[i] = -theta * k * a.up[i];
    }
    // (T + v e0^T) u = rhs with v = -theta k r 1 (Sherman-Morrison).
    const auto y = solve_tridiagonal(lo, di, up, rhs);
    if (r == 0.0) return y;
    const auto z = solve_tridiagonal(lo, di, up, std::vector<double>(nx, -theta * k * r));
    const double scale = y[0] / (1.0 + z[0]);
    std::vector<double> out(nx);
    for (std::size_t i = 0; i < nx; ++i) out[i] = y[i] - z[i] * scale;
    return out;
  };
  return march(f, grid, opt, "resetting-neumann crank-nicolson", step);
}

FDSolution solve_nlbvp(const RealFn& f, double r, const FDGrid& grid, SolverOptions opt) {
  if (!(r > 0.0)) throw std::invalid_argument("solve_nlbvp needs r > 0");
  require_grid(grid, r);
  const auto nx = static_cast<std::size_t>(grid.nx);
  const std::size_t last = nx - 1;
  const double h = grid.dx();
  const double ih2 = 1.0 / (h * h);
  const double b = std::sqrt(r);
  const double c = 2.0 * b;
  const bool central = c * h / 2.0 <= 1.0;

  // Interior operator u_xx - c u_x on rows 1..N (row 0 unused).
  Stencil a{std::vector<double>(nx, 0.0), std::vector<double>(nx, 0.0), std::vector<double>(nx, 0.0)};
  for (std::size_t i = 1; i < last; ++i) {
    if (central) {
      a.lo[i] = ih2 + c / (2.0 * h);
      a.di[i] = -2.0 * ih2;
      a.up[i] = ih2 - c / (2.0 * h);
    } else {
      a.lo[i] = ih2 + c / h;
      a.di[i] = -2.0 * ih2 - c / h;
      a.up[i] = ih2;
    }
  }
  a.lo[last] = 2.0 * ih2;
  a.di[last] = -2.0 * ih2;

  // Boundary row: beta . u = 0.
  std::vector<double> beta(nx, 0.0);
  const double tail = b * std::exp(-b * grid.x_max);
  beta[0] = -3.0 / (2.0 * h) - tail;
  beta[1] += 4.0 / (2.0 * h);
  beta[2] += -1.0 / (2.0 * h);
  for (std::size_t j = 1; j < nx; ++j) {
    const double w = (j == last ? 0.5 * h : h) * r * std::exp(-b * static_cast<double>(j) * h);
    beta[j] += w;
    beta[0] -= w;
  }
  beta[last] += tail;

  const std::size_t m = nx - 1;  // unknowns u_1..u_N
  const auto step = [&](const std::vector<double>& u, double theta, double k) {
    const auto au = apply_stencil(a, u);
    std::vector<double> rhs(m), lo(m), di(m), up(m);
    for (std::size_t i = 1; i < nx; ++i) {
      rhs[i - 1] = u[i] + (1.0 - theta) * k * au[i];
      lo[i - 1] = -theta * k * a.lo[i];
      di[i - 1] = 1.0 - theta * k * a.di[i];
      up[i - 1] = -theta * k * a.up[i];
    }
    // Row 1 couples to the new u_0: u_{1..N} = p + q u_0.
    const double coupling = lo[0];
    const auto p = solve_tridiagonal(lo, di, up, rhs);
    std::vector<double> e1(m, 0.0);
    e1[0] = -coupling;
    const auto q = solve_tridiagonal(lo, di, up, e1);
    double num = 0.0;
    double den = beta[0];
    for (std::size_t j = 1; j < nx; ++j) {
      num += beta[j] * p[j - 1];
      den += beta[j] * q[j - 1];
    }
    if (den == 0.0) throw std::runtime_error("non-local boundary row is singular");
    std::vector<double> out(nx);
    out[0] = -num / den;
    for (std::size_t j = 1; j < nx; ++j) out[j] = p[j - 1] + q[j - 1] * out[0];
    return out;
  };
  return march(f, grid, opt, central ? "nlbvp crank-nicolson central" : "nlbvp crank-nicolson upwind", step);
}

MaxPrincipleReport check_max_principle(const FDSolution& s, const RealFn& f, double slack) {
  double lo = f(0.0);
  double hi = lo;
  for (int i = 0; i < s.grid.nx; ++i) {
    const double v = f(s.x(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  MaxPrincipleReport rep;
  for (double v : s.u) {
    const double excess = std::max(lo - v, v - hi);
    rep.worst_excess = std::max(rep.worst_excess, excess);
  }
  rep.ok = rep.worst_excess <= slack;
  return rep;
}

double stationary_functional(const FDSolution& s, int n, double r) {
  const double b = std::sqrt(r);
  const double h = s.grid.dx();
  double sum = 0.0;
  for (int i = 0; i < s.grid.nx; ++i) {
    const double w = (i == 0 || i == s.grid.nx - 1) ? 0.5 * h : h;
    sum += w * s.at(n, i) * b * std::exp(-b * s.x(i));
  }
  return sum + s.at(n, s.grid.nx - 1) * std::exp(-b * s.grid.x_max);
}

double fd_laplace_transform(const FDSolution& s, double x, double lambda) {
  const double k = s.grid.dt();
  double sum = 0.0;
  for (int n = 0; n <= s.grid.nt; ++n) {
    const double w = (n == 0 || n == s.grid.nt) ? 0.5 * k : k;
    sum += w * std::exp(-lambda * s.t(n)) * s.value(n, x);
  }
  return sum + s.value(s.grid.nt, x) * std::exp(-lambda * s.grid.t_max) / lambda;
}

double resetting_resolvent(const RealFn& f, double x, double lambda, double r) {
  if (!(lambda > 0.0)) throw std::domain_error("resetting_resolvent: lambda must be > 0");
  const double mu = lambda + r;
  const double s = std::sqrt(mu);
  const auto reflected = [&](double x0) {
    const auto kern = [&](double y) {
      return (std::exp(-std::abs(x0 - y) * s) + std::exp(-(x0 + y) * s)) / (2.0 * s) * f(y);
    };
    return (x0 > 0.0 ? integrate(kern, 0.0, x0) : 0.0) + integrate_to_infinity(kern, x0);
  };
  return reflected(x) + (r > 0.0 ? r / lambda * reflected(0.0) : 0.0);
}

ResolventCheck resolvent_consistency_check(PdeProblem problem, const RealFn& f, double lambda, double r,
                                           const FDGrid& grid, const std::vector<double>& xs) {
  if (!(lambda > 0.0)) throw std::domain_error("resolvent_consistency_check: lambda must be > 0");
  const FDSolution sol = problem == PdeProblem::Neumann ? solve_resetting_neumann(f, r, grid) : solve_nlbvp(f, r, grid);
  ResolventCheck rep;
  rep.xs = xs;
  rep.truncation_warning = std::exp(-lambda * grid.t_max) > 1e-6;
  for (double x : xs) {
    const double fd = fd_laplace_transform(sol, x, lambda);
    const double exact = problem == PdeProblem::Neumann ? resetting_resolvent(f, x, lambda, r)
                                                        : resolvent_full(f, x, lambda, r);
    rep.fd.push_back(fd);
    rep.exact.push_back(exact);
    rep.sup_residual = std::max(rep.sup_residual, std::abs(fd - exact));
  }
  return rep;
}

}  // namespace rlab
