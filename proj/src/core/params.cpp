#include "rlab/core/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlab {

std::vector<std::string> validate_params(const ModelParams& p, bool half_line) {
  std::vector<std::string> errors;
  if (!std::isfinite(p.r) || p.r < 0.0) errors.emplace_back("r must be ≥ 0");
  if (!std::isfinite(p.dt) || p.dt <= 0.0) errors.emplace_back("dt must be > 0");
  if (!std::isfinite(p.horizon) || p.horizon <= 0.0) errors.emplace_back("horizon must be > 0");
  if (p.dt > 0.0 && p.horizon > 0.0 && !(p.dt < p.horizon)) errors.emplace_back("dt must be < horizon");
  if (!std::isfinite(p.x0)) errors.emplace_back("x0 must be finite");
  if (half_line) {
    if (p.x0 < 0.0) errors.emplace_back("x0 must be ≥ 0 for half-line processes");
    if (p.x_r != 0.0) errors.emplace_back("x_r must be 0 for half-line processes");
  }
  return errors;
}

void require_valid(const ModelParams& p, bool half_line) {
  const auto errors = validate_params(p, half_line);
  if (errors.empty()) return;
  std::string msg = "invalid model parameters:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw std::invalid_argument(msg);
}

double default_dt(double r) { return r > 0.0 ? 1e-4 * std::max(1.0, 1.0 / r) : 1e-4; }

}  // namespace rlab
