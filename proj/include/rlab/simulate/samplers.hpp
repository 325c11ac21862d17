#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlab/core/path.hpp"
#include "rlab/simulate/engine.hpp"

namespace rlab {

// Full trajectory with local time (regulator) and event log.
AugmentedPath simulate(ProcessKind kind, const ModelParams& p, RngStreamSpec rng,
                       ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

// Value at the last grid time; equal bit for bit to the last value of
// simulate(). Resetting kinds restart from the last reset.
double simulate_terminal(ProcessKind kind, const ModelParams& p, RngStreamSpec rng,
                         ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

// Starting point drawn from Exp(sqrt(r)) on the Initial stream.
double stationary_start(double r, RngStreamSpec rng);

// Terminal values of paths 0..n-1; stationary_start() replaces x0 when
// `from_stationary` is set.
std::vector<double> terminal_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                     bool from_stationary = false,
                                     ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

// (start, terminal value) of paths 0..n-1 started from stationary_start().
std::vector<std::pair<double, double>> stationary_start_end_pairs(ProcessKind kind, const ModelParams& p,
                                                                  std::uint64_t seed, std::size_t n);

// (1/2 eps) * time spent in [0, eps) up to each grid time, trapezoid rule
// on the indicator.
std::vector<double> local_time_occupation(const AugmentedPath& path, double eps);

// Regulator local time divided by the (1/2 eps) occupation estimate, in the
// eps, dt -> 0 limit.
inline constexpr double kRegulatorPerOccupation = 2.0;

// First point whose step saw a regulator push or whose value is within
// kTolX of 0.
std::optional<double> first_hitting_time(const AugmentedPath& path);

struct CensoredSamples {
  std::vector<double> samples;  // uncensored values, in path order
  std::size_t censored = 0;
  std::size_t requested = 0;
};

// First time the regulator local time reaches `level`, linearly
// interpolated inside the crossing step. Paths that do not get there by
// 4 * p.horizon are censored.
CensoredSamples inverse_local_time_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                           double level,
                                           ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

// First hitting time of 0 within p.horizon.
CensoredSamples hitting_time_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                     ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

struct BetweenResets {
  std::vector<double> pre_reset_positions;
  std::vector<double> gaps;         // T_{i+1} - T_i
  std::vector<double> local_times;  // regulator growth over [T_i, T_{i+1})
};

// Reflected resetting paths from 0, each run up to `per_path` + 1 resets,
// until n_resets pre-reset positions are collected.
BetweenResets between_reset_samples(const ModelParams& p, std::uint64_t seed, std::size_t n_resets,
                                    std::size_t per_path = 100);

// Number of resets in [0, p.horizon] per path.
std::vector<std::size_t> reset_counts(const ModelParams& p, std::uint64_t seed, std::size_t n);

}  // namespace rlab
