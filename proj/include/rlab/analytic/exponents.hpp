#pragma once

#include <limits>
#include <vector>

namespace rlab {

// Phi(l) = l/sqrt(l+r); Psi(l) = l + sqrt(r) - r/(l+sqrt(r)).
double phi(double lambda, double r);
double psi(double lambda, double r);

// |Psi(sqrt(l+r) - sqrt(r)) - Phi(l)| / Phi(l).
double psi_phi_identity_residual(double lambda, double r);

enum class ExponentKind { Phi, Psi, HalfStable, DriftedBM };

struct LaplaceExponent {
  ExponentKind kind = ExponentKind::Phi;
  double r = 0.0;

  double operator()(double lambda) const;
  // lim Phi(l)/l as l -> inf.
  double drift() const;
  // Tail of the Levy measure, z > 0.
  double levy_tail(double z) const;
};

struct BernsteinReport {
  bool ok = true;
  double min_value = std::numeric_limits<double>::infinity();
  double min_first = std::numeric_limits<double>::infinity();
  double max_second = -std::numeric_limits<double>::infinity();
};

// Central differences with h = lambda * 1e-5. Second differences are
// compared against their rounding floor 16 eps |f| / h^2.
BernsteinReport check_bernstein(const LaplaceExponent& e, const std::vector<double>& lambdas);

// Geometric grid of n points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

enum class LevyKind { PiPhi, PiPsi };

struct LevyMeasure {
  LevyKind kind = LevyKind::PiPsi;
  double r = 0.0;

  double density(double z) const;
  double tail(double z) const;
  // Infinite for PiPhi.
  double total_mass() const;
};

// d*l + int (1 - e^{-l z}) Pi(dz), by quadrature.
double levy_khintchine(const LevyMeasure& m, double drift, double lambda);

// |Phi(l)/l - d - int_0^inf e^{-l z} tail(z) dz|, by quadrature.
double tail_symbol_residual(const LaplaceExponent& e, double lambda);

// (Phi(l)/l) e^{-x Phi(l)}: time-Laplace transform of the density at x of
// the inverse subordinator.
double inverse_subordinator_laplace(const LaplaceExponent& e, double lambda, double x);

// E[e^{-l T_x}] for the first passage T_x of the subordinator above x:
// e^{-x Phi(l)}.
double inverse_local_time_laplace(double lambda, double x, double r);

// E_x[e^{-l tau_0}] for BM with drift -2 sqrt(r): e^{-x(sqrt(l+r)-sqrt(r))}.
double hitting_time_laplace(double lambda, double x, double r);

}  // namespace rlab
