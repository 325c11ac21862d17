#pragma once

namespace rlab {

enum class HalfPlaneProblem { P1, P2 };

// Fourier multiplier of the bounded solution at height y:
// P1: xi^2/(xi^2+r) e^{-y sqrt(xi^2+r)} + r/(xi^2+r);
// P2: e^{-y (sqrt(xi^2+r) - sqrt(r))}.
double halfplane_multiplier(HalfPlaneProblem problem, double xi, double y, double r);

// P1: d/dy of the multiplier at y = 0.
// P2: d/dy at 0 plus the Marchaud term of the multiplier at 0.
double boundary_symbol(HalfPlaneProblem problem, double xi, double r);

// P2 assembly with the Marchaud term computed by quadrature.
double boundary_symbol_p2_quadrature(double xi, double r);

}  // namespace rlab
