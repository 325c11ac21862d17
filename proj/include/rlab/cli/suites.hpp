#pragma once

// Verification checks grouped the way the `verify` command runs them.
// Every function is deterministic given its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "rlab/stats/report.hpp"

namespace rlab::cli {

using Reports = std::vector<VerificationReport>;

struct SuiteConfig {
  double r = 1.0;
  std::size_t paths = 100000;
  std::uint64_t seed = 1;
  double dt = 0.0;  // 0 picks each check's own default
  double alpha = 0.01;
};

// X+ terminal law against mu+, X~ stationary marginal, Poisson reset count.
Reports stationary_checks(double r, double horizon, double dt, std::size_t n, std::uint64_t seed, double alpha);

// Inverse local time of X+ at `level` against e^{-level Phi(lambda)}.
Reports inverse_local_time_checks(double r, double level, const std::vector<double>& lambdas, double dt,
                                  std::size_t n, std::uint64_t seed);

// Same for the inverse of L^Psi(gamma~), plus a two-sample KS between the
// X+ and X~ sample sets.
Reports composed_local_time_checks(double r, double level, const std::vector<double>& lambdas, double dt,
                                   std::size_t n, std::uint64_t seed, double alpha);

// Pre-reset positions, inter-reset local times and gaps of X+; boundary
// jump sizes and zero-holding local times of X~.
Reports between_reset_checks(double r, std::size_t n, std::uint64_t seed, double alpha);

// E[e^{-lambda tau_0}] of the drifted reflected BM from x0.
Reports hitting_time_checks(double r, double x0, double lambda, double dt, std::size_t n, std::uint64_t seed);

// Psi/Phi identity, Levy-Khintchine, tail symbol, Bernstein pattern,
// K1 = K2 symbols.
Reports identity_checks();

// Monte Carlo Feynman-Kac against both parabolic solvers, the maximum
// principle and the resolvent residuals. f(y) = e^{-y}.
Reports pde_checks(double r, double dt, std::size_t n, std::uint64_t seed);

// Two-point duality test and the non-reversibility control.
Reports duality_checks(double r, double t, double dt, std::size_t n, std::uint64_t seed);

// T1 vs T2 values and the cf of each against its target at every xi, for
// one r. At r = 0 only T1 is sampled. `with_oracle` adds a two-sample KS
// of T1 against the truncated-Levy oracle.
Reports trace_checks(double r, double t_trace, const std::vector<double>& xis, double dt, std::size_t n,
                     std::uint64_t seed, double alpha, bool with_oracle = false);

// r = 0: pathwise equality with reflected BM and classical forms of every
// r-parameterised formula.
Reports collapse_checks(double dt, std::size_t n, std::uint64_t seed);

// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for unknown names.
Reports run_suite(const std::string& name, const SuiteConfig& cfg);

nlohmann::json to_json(const VerificationReport& rep);

bool all_passed(const Reports& reps);

}  // namespace rlab::cli
