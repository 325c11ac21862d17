#include "rlab/core/path.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rlab {

namespace {

template <class T>
std::string at(const char* what, std::size_t i, T value) {
  std::ostringstream os;
  os << what << " at index " << i << " (" << value << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> check_invariants(const SamplePath& path, const ModelParams& p, bool half_line) {
  std::vector<std::string> errors;
  const auto& t = path.times;
  const auto& x = path.values;
  if (t.empty()) {
    errors.emplace_back("empty path");
    return errors;
  }
  if (t.size() != x.size()) errors.emplace_back("values.len != times.len");
  if (t.front() != 0.0) errors.emplace_back("times[0] != 0");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) errors.push_back(at("times not strictly increasing", i, t[i]));
  }
  if (t.back() > p.horizon + p.dt * (1.0 + 1e-9)) errors.emplace_back("last time exceeds horizon + dt");
  if (half_line) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0.0) errors.push_back(at("negative value", i, x[i]));
    }
  }

  const auto& ev = path.events;
  if (ev.reset_times.size() != ev.pre_reset_positions.size()) {
    errors.emplace_back("pre_reset_positions.len != reset_times.len");
  }
  for (std::size_t i = 1; i < ev.reset_times.size(); ++i) {
    if (!(ev.reset_times[i] > ev.reset_times[i - 1])) errors.push_back(at("reset_times not increasing", i, ev.reset_times[i]));
  }
  if (half_line) {
    for (std::size_t i = 0; i < ev.pre_reset_positions.size(); ++i) {
      if (ev.pre_reset_positions[i] < 0.0) errors.push_back(at("negative pre-reset position", i, ev.pre_reset_positions[i]));
    }
  }
  for (std::size_t i = 0; i < ev.boundary_jumps.size(); ++i) {
    if (!(ev.boundary_jumps[i].size > 0.0)) errors.push_back(at("non-positive jump size", i, ev.boundary_jumps[i].size));
  }
  // Each reset is a recorded point where the value sits at x_r.
  for (double tr : ev.reset_times) {
    const auto it = std::lower_bound(t.begin(), t.end(), tr);
    if (it == t.end() || *it != tr) {
      errors.push_back(at("reset time missing from grid", static_cast<std::size_t>(it - t.begin()), tr));
      continue;
    }
    const auto k = static_cast<std::size_t>(it - t.begin());
    if (k < x.size() && x[k] != p.x_r) errors.push_back(at("value at reset time is not x_r", k, x[k]));
  }
  return errors;
}

std::vector<std::string> check_invariants(const AugmentedPath& aug, const ModelParams& p, bool half_line,
                                          double step_scale) {
  auto errors = check_invariants(aug.path, p, half_line);
  const auto& g = aug.local_time;
  const auto& x = aug.path.values;
  if (g.size() != x.size()) errors.emplace_back("local_time.len != times.len");
  if (aug.regulator_increments.size() != x.size()) errors.emplace_back("regulator_increments.len != times.len");
  if (!g.empty() && g.front() != 0.0) errors.emplace_back("local_time[0] != 0");
  const std::size_t n = std::min({g.size(), x.size(), aug.regulator_increments.size()});
  for (std::size_t i = 1; i < n; ++i) {
    if (g[i] < g[i - 1]) errors.push_back(at("local time decreases", i, g[i]));
    if (aug.regulator_increments[i] < 0.0) errors.push_back(at("negative regulator increment", i, aug.regulator_increments[i]));
    if (g[i] > g[i - 1]) {
      const double near = std::min(x[i], x[i - 1]);
      if (near > kTolX + step_scale) errors.push_back(at("local time grows away from zero", i, near));
    }
  }
  return errors;
}

}  // namespace rlab
