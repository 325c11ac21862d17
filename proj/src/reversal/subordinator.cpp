#include "rlab/reversal/subordinator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rlab {

SubordinatorPath::SubordinatorPath(double drift, std::vector<double> jump_times, std::vector<double> jump_sizes,
                                   double horizon)
    : drift_(drift), times_(std::move(jump_times)), sizes_(std::move(jump_sizes)), horizon_(horizon) {
  if (!(drift_ > 0.0)) throw std::invalid_argument("subordinator drift must be > 0");
  if (times_.size() != sizes_.size()) throw std::invalid_argument("jump_times and jump_sizes differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!(sizes_[i] > 0.0)) throw std::invalid_argument("jump sizes must be > 0");
    if (i > 0 && !(times_[i] > times_[i - 1])) throw std::invalid_argument("jump times must increase");
    before_.push_back(sum);
    sum += sizes_[i];
  }
  if (!times_.empty() && times_.back() > horizon_) throw std::invalid_argument("jump beyond horizon");
}

double SubordinatorPath::value(double u) const {
  if (u < 0.0 || u > horizon_) throw std::out_of_range("subordinator evaluated outside [0, horizon]");
  const auto it = std::upper_bound(times_.begin(), times_.end(), u);
  const auto k = static_cast<std::size_t>(it - times_.begin());
  const double jumps = k == 0 ? 0.0 : before_[k - 1] + sizes_[k - 1];
  return drift_ * u + jumps;
}

std::size_t SubordinatorPath::first_jump_above(double t) const {
  std::size_t lo = 0;
  std::size_t hi = times_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (drift_ * times_[mid] + before_[mid] > t) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

double SubordinatorPath::inverse(double t) const {
  if (t < 0.0 || t >= covered()) throw std::out_of_range("level outside the covered range");
  const std::size_t i = first_jump_above(t);
  if (i > 0) {
    const std::size_t j = i - 1;
    const double after = drift_ * times_[j] + before_[j] + sizes_[j];
    if (t < after) return times_[j];
    return (t - before_[j] - sizes_[j]) / drift_;
  }
  return t / drift_;
}

double SubordinatorPath::remaining_lifetime(double t) const {
  if (t < 0.0 || t >= covered()) throw std::out_of_range("level outside the covered range");
  const std::size_t i = first_jump_above(t);
  if (i > 0) {
    const std::size_t j = i - 1;
    const double after = drift_ * times_[j] + before_[j] + sizes_[j];
    if (t < after) return after - t;
  }
  return 0.0;
}

LazyPsiSubordinator::LazyPsiSubordinator(double r, RngStreamSpec rng)
    : rate_(std::sqrt(r)), draws_(rng, Purpose::Subordinator) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be ≥ 0");
  next_time_ = rate_ > 0.0 ? draws_.exponential(rate_) : std::numeric_limits<double>::infinity();
}

void LazyPsiSubordinator::draw_one() {
  before_.push_back(size_sum(times_.size()));
  times_.push_back(next_time_);
  sizes_.push_back(draws_.exponential(rate_));
  next_time_ += draws_.exponential(rate_);
}

void LazyPsiSubordinator::cover_operational(double u) {
  while (next_time_ <= u) draw_one();
}

void LazyPsiSubordinator::cover_level(double t) {
  // Next jump starts at level next_time_ + (all sizes so far) > t.
  while (next_time_ + size_sum(times_.size()) <= t) draw_one();
}

double LazyPsiSubordinator::value(double u) {
  cover_operational(u);
  const auto it = std::upper_bound(times_.begin(), times_.end(), u);
  return u + size_sum(static_cast<std::size_t>(it - times_.begin()));
}

SubordinatorPath LazyPsiSubordinator::snapshot(double horizon) {
  cover_operational(horizon);
  const auto it = std::upper_bound(times_.begin(), times_.end(), horizon);
  const auto k = static_cast<std::size_t>(it - times_.begin());
  return SubordinatorPath(1.0, std::vector<double>(times_.begin(), times_.begin() + static_cast<long>(k)),
                          std::vector<double>(sizes_.begin(), sizes_.begin() + static_cast<long>(k)), horizon);
}

SubordinatorPath sample_subordinator_psi(double r, double op_horizon, RngStreamSpec rng) {
  if (!(op_horizon > 0.0)) throw std::invalid_argument("op_horizon must be > 0");
  LazyPsiSubordinator lazy(r, rng);
  return lazy.snapshot(op_horizon);
}

}  // namespace rlab
