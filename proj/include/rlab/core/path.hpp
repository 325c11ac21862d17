#pragma once

#include <string>
#include <vector>

#include "rlab/core/params.hpp"

namespace rlab {

// A jump of the reversed process away from zero. `local_time` is the
// process's own boundary local time at the jump.
struct BoundaryJump {
  double time = 0.0;
  double size = 0.0;
  double local_time = 0.0;
};

struct EventLog {
  std::vector<double> reset_times;
  std::vector<double> pre_reset_positions;
  std::vector<BoundaryJump> boundary_jumps;
};

struct SamplePath {
  std::vector<double> times;
  std::vector<double> values;
  EventLog events;
};

// Path plus its boundary local time (read off the Skorokhod regulator) and
// the per-point regulator pushes.
struct AugmentedPath {
  SamplePath path;
  std::vector<double> local_time;
  std::vector<double> regulator_increments;
};

// Invariant violations of the containers; empty when consistent.
// `step_scale` widens the "at zero" band for local-time increments (the
// regulator can push inside a step whose endpoints are both positive).
std::vector<std::string> check_invariants(const SamplePath& path, const ModelParams& p, bool half_line);
std::vector<std::string> check_invariants(const AugmentedPath& path, const ModelParams& p, bool half_line,
                                          double step_scale);

}  // namespace rlab
