#pragma once

#include <string>
#include <vector>

namespace rlab {

// Absolute spatial tolerance for "at zero".
inline constexpr double kTolX = 1e-12;

struct ModelParams {
  double r = 0.0;        // resetting rate
  double x0 = 0.0;       // start position
  double x_r = 0.0;      // resetting point
  double horizon = 1.0;  // total simulated time T
  double dt = 1e-4;      // uniform grid step
};

// Every violated invariant, one message each. Empty means valid.
// Half-line processes additionally require x0 >= 0 and x_r == 0.
std::vector<std::string> validate_params(const ModelParams& p, bool half_line = true);

// Throws std::invalid_argument listing all violations.
void require_valid(const ModelParams& p, bool half_line = true);

// 1e-4 * max(1, 1/r); r == 0 gives 1e-4.
double default_dt(double r);

}  // namespace rlab
