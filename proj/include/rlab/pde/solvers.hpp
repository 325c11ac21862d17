#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rlab/analytic/quadrature.hpp"

namespace rlab {

struct FDGrid {
  double x_max = 10.0;
  int nx = 1001;  // points, including both ends
  int nt = 1000;  // time steps
  double t_max = 1.0;

  double dx() const { return x_max / (nx - 1); }
  double dt() const { return t_max / nt; }
};

// nx >= 16, nt >= 1, t_max > 0, x_max >= 6/sqrt(r) (r > 0) and
// x_max >= 6 sqrt(2 t_max). Empty when valid.
std::vector<std::string> validate_grid(const FDGrid& g, double r);

// Smallest standard grid for the given r and t_max with spacing near dx.
FDGrid default_grid(double r, double t_max, double dx = 0.01, double dt = 1e-3);

struct FDSolution {
  FDGrid grid;
  std::vector<double> u;  // (nt+1) x nx, row-major in time
  std::string scheme;

  double at(int time_index, int space_index) const {
    return u[static_cast<std::size_t>(time_index) * static_cast<std::size_t>(grid.nx) +
             static_cast<std::size_t>(space_index)];
  }
  // Linear interpolation in x at a time index.
  double value(int time_index, double x) const;
  // Linear interpolation in t and x.
  double value_at(double t, double x) const;
  double x(int i) const { return i * grid.dx(); }
  double t(int n) const { return n * grid.dt(); }
};

struct SolverOptions {
  double theta = 0.5;
  // Leading time steps taken as two backward-Euler half-steps each.
  int startup_implicit_steps = 2;
};

// u_t = u_xx + r (u(t,0) - u(t,x)), u_x(t,0) = 0, u_x(t,x_max) = 0.
FDSolution solve_resetting_neumann(const RealFn& f, double r, const FDGrid& grid, SolverOptions opt = {});

// u_t = u_xx - 2 sqrt(r) u_x with u_x(t,0) + D^Psi u(t,0) = 0 and
// u_x(t,x_max) = 0. Requires r > 0.
FDSolution solve_nlbvp(const RealFn& f, double r, const FDGrid& grid, SolverOptions opt = {});

struct MaxPrincipleReport {
  bool ok = true;
  double worst_excess = 0.0;  // max over grid of distance outside [min f, max f]
};

MaxPrincipleReport check_max_principle(const FDSolution& s, const RealFn& f, double slack = 1e-12);

// int u(t, x) mu+(dx), trapezoid on the grid plus u(t, x_max) times the
// stationary mass beyond x_max.
double stationary_functional(const FDSolution& s, int time_index, double r);

// Trapezoid-in-time Laplace transform at x, plus u(t_max, x) e^{-lambda t_max}/lambda.
double fd_laplace_transform(const FDSolution& s, double x, double lambda);

enum class PdeProblem { Neumann, Nlbvp };

struct ResolventCheck {
  std::vector<double> xs;
  std::vector<double> fd;
  std::vector<double> exact;
  double sup_residual = 0.0;
  bool truncation_warning = false;  // e^{-lambda t_max} > 1e-6
};

ResolventCheck resolvent_consistency_check(PdeProblem problem, const RealFn& f, double lambda, double r,
                                           const FDGrid& grid, const std::vector<double>& xs);

// Resolvent of the reflected resetting process by renewal at the first
// reset: R+_{lambda+r} f(x) + (r/lambda) R+_{lambda+r} f(0), with R+ the
// reflected-BM resolvent.
double resetting_resolvent(const RealFn& f, double x, double lambda, double r);

}  // namespace rlab
