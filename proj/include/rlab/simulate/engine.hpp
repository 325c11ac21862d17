#pragma once

// Step-by-step path generator shared by every Monte Carlo routine.
//
// Grid step k covers [k dt, (k+1) dt]. Without a reset in the step, its
// Gaussian comes from the Increment stream (block k/2, half k%2). A step
// containing resets is split at each reset time and sub-step j draws from
// (SplitIncrement, k, j). The reflection uses the exact law of the step
// minimum given both endpoints (Brownian bridge), uniform from (Bridge, k, j).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "rlab/core/params.hpp"
#include "rlab/core/rng.hpp"

namespace rlab {

enum class ProcessTag { FreeBM, ReflectedBM, FreeResetting, ReflectedResetting, DriftedReflected };

enum class ReflectionScheme { BridgeMinimum, Clamp };

struct ProcessKind {
  ProcessTag tag = ProcessTag::ReflectedBM;
  double drift = 0.0;

  // Drift is -2 sqrt(r) for DriftedReflected, 0 otherwise.
  static ProcessKind of(ProcessTag tag, double r);

  bool reflected() const {
    return tag == ProcessTag::ReflectedBM || tag == ProcessTag::ReflectedResetting ||
           tag == ProcessTag::DriftedReflected;
  }
  bool resetting() const { return tag == ProcessTag::FreeResetting || tag == ProcessTag::ReflectedResetting; }
};

const char* to_string(ProcessTag tag);
// Accepts the enum names and the short forms bm, bm+, x, x+, btilde.
bool parse_process_tag(const std::string& s, ProcessTag& out);

// Number of grid steps covering [0, horizon].
std::uint64_t step_count(double horizon, double dt);

// Observer interface (duck-typed):
//   bool on_point(double t, double x, double push)  -- false stops the run
//   void on_reset(double t, double pre_reset_value)
class PathEngine {
 public:
  PathEngine(ProcessKind kind, const ModelParams& p, RngStreamSpec rng,
             ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

  double time() const { return t_; }
  double value() const { return x_; }
  std::uint64_t step() const { return k_; }
  double dt() const { return dt_; }

  // Jumps to the state right after the last reset at or before grid time
  // n_steps*dt (no-op when there is none). Later draws are identical to
  // those of an uninterrupted run.
  void skip_to_last_reset(std::uint64_t n_steps);

  // Advances until step n_steps is completed or the observer stops.
  template <class Observer>
  void run(Observer& obs, std::uint64_t n_steps);

 private:
  double full_normal(std::uint64_t k) {
    const std::uint64_t block = k >> 1;
    if (block != cached_block_) {
      cached_normals_ = increments_.normals(block);
      cached_block_ = block;
    }
    return cached_normals_[k & 1];
  }

  // Moves x_ over a sub-step of length h with standard normal z; returns
  // the regulator push.
  double move(double h, double z, std::uint64_t k, std::uint32_t sub) {
    const double y = x_ + std::sqrt(2.0 * h) * z + drift_ * h;
    if (!reflected_) {
      x_ = y;
      return 0.0;
    }
    if (scheme_ == ReflectionScheme::Clamp) {
      if (y >= 0.0) {
        x_ = y;
        return 0.0;
      }
      x_ = 0.0;
      return -y;
    }
    // P(min < 0 | endpoints) = exp(-x y / h); below e^-50 it is skipped.
    if (y > 0.0 && x_ * y > 50.0 * h) {
      x_ = y;
      return 0.0;
    }
    const double u = bridge_.uniforms(k, sub)[0];
    const double d = y - x_;
    const double m = 0.5 * (x_ + y - std::sqrt(d * d - 4.0 * h * std::log(u)));
    if (m < 0.0) {
      x_ = y - m;
      return -m;
    }
    x_ = y;
    return 0.0;
  }

  double draw_interarrival() { return r_ > 0.0 ? resets_.exponential(r_) : std::numeric_limits<double>::infinity(); }

  double dt_;
  double drift_;
  double r_;
  double x_r_;
  bool reflected_;
  ReflectionScheme scheme_;
  RandomStream increments_;
  RandomStream splits_;
  RandomStream bridge_;
  SequentialDraws resets_;

  std::uint64_t k_ = 0;
  std::uint32_t sub_ = 0;
  double t_ = 0.0;
  double x_;
  double next_reset_;
  std::uint64_t cached_block_ = std::numeric_limits<std::uint64_t>::max();
  std::array<double, 2> cached_normals_{};
};

template <class Observer>
void PathEngine::run(Observer& obs, std::uint64_t n_steps) {
  while (k_ < n_steps) {
    const double t_end = static_cast<double>(k_ + 1) * dt_;
    if (next_reset_ <= t_end) {
      const double h = next_reset_ - t_;
      const double push = h > 0.0 ? move(h, splits_.normals(k_, sub_)[0], k_, sub_) : 0.0;
      ++sub_;
      const double tr = next_reset_;
      obs.on_reset(tr, x_);
      x_ = x_r_;
      t_ = tr;
      next_reset_ = tr + draw_interarrival();
      if (tr >= t_end) {
        ++k_;
        sub_ = 0;
      }
      if (!obs.on_point(tr, x_, push)) return;
      continue;
    }
    double push;
    if (sub_ == 0) {
      push = move(dt_, full_normal(k_), k_, 0);
    } else {
      push = move(t_end - t_, splits_.normals(k_, sub_)[0], k_, sub_);
    }
    t_ = t_end;
    ++k_;
    sub_ = 0;
    if (!obs.on_point(t_, x_, push)) return;
  }
}

}  // namespace rlab
