#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rlab/core/params.hpp"
#include "rlab/stats/tests.hpp"

namespace rlab {

enum class TraceKind { T1, T2 };

struct TraceSample {
  double t = 0.0;      // trace time (local-time units)
  double value = 0.0;  // horizontal position
  TraceKind which = TraceKind::T1;
};

struct TraceSet {
  std::vector<TraceSample> samples;      // uncensored, in path order
  std::vector<double> stopping_times;    // physical inverse local times
  std::size_t censored = 0;
  std::size_t requested = 0;

  std::vector<double> values() const;
};

// Per path: vertical X+ (T1) or X~ (T2) from 0 until its boundary local
// time reaches t_trace; the horizontal coordinate is sqrt(2 S) Z at that
// time S, with Z from the Horizontal stream. p.horizon is the initial
// search horizon, extended once by 4x.
TraceSet sample_trace(TraceKind which, const ModelParams& p, std::uint64_t seed, std::size_t n, double t_trace);

// e^{-t xi^2/sqrt(xi^2+r)}.
double trace_cf_target(double xi, double t_trace, double r);

// Empirical cf over all requested paths. A censored path has stopping time
// beyond the search horizon H, so its cf term is at most e^{-xi^2 H}; it
// is counted as 0.
ComplexEstimate trace_cf_estimate(const TraceSet& set, double xi);

struct OracleOptions {
  double eps_cut = 1e-6;
};

// Independent sampler: compound Poisson part of Pi^Phi on (eps, inf) over
// time t_trace plus the mean of the jumps below eps, then sqrt(2 H) Z.
// Uses only the Oracle stream. Throws when eps_cut > 1e-2.
std::vector<double> truncated_levy_trace_oracle(double r, double t_trace, std::uint64_t seed, std::size_t n,
                                                OracleOptions opt = {});

// Subordinator values H^Phi_t from the same construction.
std::vector<double> truncated_subordinator_samples(double r, double t, std::uint64_t seed, std::size_t n,
                                                   OracleOptions opt = {});

// z with e^{-r z}/sqrt(pi z) = c (Newton in log z).
double pi_phi_tail_inverse(double c, double r);

}  // namespace rlab
