#pragma once

#include <cstddef>
#include <vector>

#include "rlab/core/rng.hpp"

namespace rlab {

// Drift plus finitely many jumps on the operational interval [0, horizon].
class SubordinatorPath {
 public:
  SubordinatorPath() = default;
  SubordinatorPath(double drift, std::vector<double> jump_times, std::vector<double> jump_sizes, double horizon);

  double drift() const { return drift_; }
  double horizon() const { return horizon_; }
  const std::vector<double>& jump_times() const { return times_; }
  const std::vector<double>& jump_sizes() const { return sizes_; }

  // H(u) = drift u + sum of sizes with jump time <= u; u in [0, horizon].
  double value(double u) const;
  // Levels t with inverse(t) <= horizon: [0, value(horizon)).
  double covered() const { return value(horizon_); }
  // L(t) = inf{u : H(u) > t}.
  double inverse(double t) const;
  // R(t) = H(L(t)) - t.
  double remaining_lifetime(double t) const;

 private:
  // Index of the first jump whose left level exceeds t.
  std::size_t first_jump_above(double t) const;

  double drift_ = 1.0;
  std::vector<double> times_;
  std::vector<double> sizes_;
  std::vector<double> before_;  // sum of sizes of earlier jumps
  double horizon_ = 0.0;
};

// Drift 1, jumps at rate sqrt(r) with Exp(sqrt(r)) sizes, grown on demand
// from the Subordinator stream. The realised jumps do not depend on how
// the horizon was grown.
class LazyPsiSubordinator {
 public:
  LazyPsiSubordinator(double r, RngStreamSpec rng);

  // Makes the jump list complete on [0, u].
  void cover_operational(double u);
  // Makes the jump list complete up to level t of H.
  void cover_level(double t);

  std::size_t jump_count() const { return times_.size(); }
  double jump_time(std::size_t i) const { return times_[i]; }
  double jump_size(std::size_t i) const { return sizes_[i]; }
  // H just before jump i and right after it.
  double level_before(std::size_t i) const { return times_[i] + before_[i]; }
  double level_after(std::size_t i) const { return level_before(i) + sizes_[i]; }
  // Sum of the first i jump sizes.
  double size_sum(std::size_t i) const { return i == 0 ? 0.0 : before_[i - 1] + sizes_[i - 1]; }
  double value(double u);

  SubordinatorPath snapshot(double horizon);

 private:
  void draw_one();

  double rate_;
  SequentialDraws draws_;
  std::vector<double> times_;
  std::vector<double> sizes_;
  std::vector<double> before_;
  double next_time_;
};

SubordinatorPath sample_subordinator_psi(double r, double op_horizon, RngStreamSpec rng);

}  // namespace rlab
