#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace rlab {

struct VerificationReport {
  std::string name;
  double statistic = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double dt = std::numeric_limits<double>::quiet_NaN();
  double p_value = std::numeric_limits<double>::quiet_NaN();
  std::string details;
};

// passed = |statistic - target| <= tolerance.
VerificationReport closeness_report(std::string name, double statistic, double target, double tolerance);

}  // namespace rlab
