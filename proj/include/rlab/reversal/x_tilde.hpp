#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rlab/core/path.hpp"
#include "rlab/reversal/subordinator.hpp"
#include "rlab/simulate/engine.hpp"
#include "rlab/simulate/samplers.hpp"
#include "rlab/stats/report.hpp"

namespace rlab {

struct ReversedPath {
  SamplePath path;                   // X~ with boundary jumps logged
  std::vector<double> gamma_tilde;   // local time of the drifted reflected BM
  std::vector<double> regulator_increments;
  SubordinatorPath subordinator;     // H^Psi on [0, gamma_tilde.back()]
  std::vector<double> composed_local_time;  // L^Psi(gamma_tilde)
};

// Turns points (t, b, push) of the drifted reflected BM into points of
// X~ = b + R^Psi(gamma). Jump i of H^Psi occupies levels
// [tau_i + S_{i-1}, tau_i + S_i); while gamma is inside, R = upper - gamma.
class XTildeComposer {
 public:
  XTildeComposer(double r, RngStreamSpec rng);

  struct Point {
    double x;               // X~ value
    double composed_local;  // L^Psi(gamma)
    bool in_jump;
  };

  Point advance(double t, double b, double push);
  double gamma() const { return gamma_; }
  const std::vector<BoundaryJump>& jumps() const { return jumps_; }
  LazyPsiSubordinator& subordinator() { return sub_; }

 private:
  LazyPsiSubordinator sub_;
  double gamma_ = 0.0;
  std::size_t activated_ = 0;
  std::vector<BoundaryJump> jumps_;
};

ReversedPath build_x_tilde(const ModelParams& p, RngStreamSpec rng,
                           ReflectionScheme scheme = ReflectionScheme::BridgeMinimum);

// X~ values at grid time t for paths 0..n-1, started from p.x0 or from
// stationary_start().
std::vector<double> x_tilde_terminal_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                             bool from_stationary);

// (start, value at p.horizon) for paths 0..n-1 started from the stationary law.
std::vector<std::pair<double, double>> x_tilde_start_end_pairs(const ModelParams& p, std::uint64_t seed,
                                                               std::size_t n);

// E_{mu+}[f(X~_t)] against int f dmu+, within 3 standard errors.
VerificationReport x_tilde_marginal_check(const ModelParams& p, std::uint64_t seed, std::size_t n, double t,
                                          const std::function<double(double)>& f, std::string name);

// First time L^Psi(gamma~) reaches `level` (gamma~ reaching H^Psi(level)),
// linearly interpolated inside the crossing step; censored past 4 * horizon.
CensoredSamples composed_inverse_local_time_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                                    double level);

// E[e^{-lambda T}] of those samples against e^{-level Phi(lambda)}.
VerificationReport composed_local_time_law_check(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                                 double level, double lambda);

struct BoundaryJumpSamples {
  std::vector<double> sizes;
  std::vector<double> holding_local_times;  // X~ local time between consecutive jumps
};

// X~ paths from 0, each run until per_path + 1 jumps, until n jumps.
BoundaryJumpSamples boundary_jump_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                          std::size_t per_path = 100);

}  // namespace rlab
