// Acceptance run: one PASS/FAIL line per criterion on stdout, the
// individual reports on stderr. `--only N` runs a single criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "rlab/analytic/kernels.hpp"
#include "rlab/cli/suites.hpp"
#include "rlab/simulate/samplers.hpp"
#include "rlab/stats/tests.hpp"

using namespace rlab;
using namespace rlab::cli;

namespace {

constexpr std::size_t kPaths = 100000;
constexpr double kAlpha = 0.01;

void append(Reports& out, const Reports& more) { out.insert(out.end(), more.begin(), more.end()); }

Reports criterion_1() {
  const double r = 2.0;
  const ModelParams p{r, 0.0, 0.0, 20.0, 1e-4};
  const auto xs = terminal_samples(ProcessKind::of(ProcessTag::ReflectedResetting, r), p, 101, kPaths);
  auto rep = ks_test(EmpiricalDistribution(xs), [r](double y) { return stationary_cdf_halfline(y, r); }, kAlpha,
                     "x_plus_terminal_vs_exp_sqrt2_ks r=2 T=20");
  rep.n = kPaths;
  rep.seed = 101;
  rep.dt = p.dt;
  return {rep};
}

Reports criterion_2() { return inverse_local_time_checks(1.0, 0.5, {0.5, 1.0, 3.0}, 1e-4, kPaths, 202); }

Reports criterion_3() { return composed_local_time_checks(1.0, 0.5, {0.5, 1.0, 3.0}, 1e-4, kPaths, 202, kAlpha); }

Reports criterion_4() {
  Reports out;
  // Separate seeds per rate so the checks are independent.
  append(out, between_reset_checks(1.0, kPaths, 404, kAlpha));
  append(out, between_reset_checks(4.0, kPaths, 414, kAlpha));
  return out;
}

Reports criterion_5() { return hitting_time_checks(1.0, 1.0, 3.0, 1e-4, kPaths, 505); }

Reports criterion_6() { return identity_checks(); }

Reports criterion_7() { return pde_checks(1.0, 1e-3, kPaths, 707); }

Reports criterion_8() { return duality_checks(1.0, 0.5, 1e-3, 1000000, 808); }

Reports criterion_9() {
  Reports out;
  const std::vector<double> xis{0.5, 1.0, 2.0};
  append(out, trace_checks(0.5, 1.0, xis, 1e-3, kPaths, 909, kAlpha));
  append(out, trace_checks(1.0, 1.0, xis, 1e-3, kPaths, 929, kAlpha));
  append(out, trace_checks(2.0, 1.0, xis, 1e-3, kPaths, 939, kAlpha));
  append(out, trace_checks(0.0, 1.0, xis, 1e-3, kPaths, 919, kAlpha));
  return out;
}

Reports criterion_10() { return collapse_checks(1e-3, 100, 1010); }

struct Criterion {
  int id;
  const char* what;
  std::function<Reports()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "stationary law of X+ (r=2, T=20, dt=1e-4, N=1e5): KS vs Exp(sqrt 2) at alpha=0.01", criterion_1},
      {2, "inverse local time of X+ (r=1, x=0.5): Laplace transform within 3 se at lambda 0.5, 1, 3", criterion_2},
      {3, "inverse of L^Psi(gamma~) matches the same targets; KS2 against X+ at alpha=0.01", criterion_3},
      {4, "between-reset and between-jump laws are Exp(sqrt r) at r = 1, 4", criterion_4},
      {5, "hitting time of B~ from x=1, r=1: E[exp(-3 tau)] = exp(-1) within 3 se", criterion_5},
      {6, "analytic identities: Psi/Phi 1e-12, Levy-Khintchine and tail 1e-6, K1 = K2 1e-10", criterion_6},
      {7, "both FD solvers vs Monte Carlo within 3 se + 1e-3; max principle; resolvents within 1e-3", criterion_7},
      {8, "two-point duality TV test passes at N=1e6; non-reversibility control fails it", criterion_8},
      {9, "trace: T1 vs T2 KS2 at r = 0.5, 1, 2; cf within 3 se; Cauchy cf at r = 0", criterion_9},
      {10, "r = 0 collapse: pathwise equality with B+ and classical closed forms", criterion_10},
  };
  if (only != 0 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::fprintf(stderr, "--only must be in 1..%zu\n", criteria.size());
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    Reports reps;
    try {
      reps = c.run();
      ok = all_passed(reps) && !reps.empty();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : reps) {
      std::fprintf(stderr, "  [%d] %s %s statistic=%.6g target=%.6g tolerance=%.6g p=%.4g %s\n", c.id,
                   r.passed ? "pass" : "FAIL", r.name.c_str(), r.statistic, r.target, r.tolerance, r.p_value,
                   r.details.c_str());
    }
    if (!error.empty()) std::fprintf(stderr, "  [%d] error: %s\n", c.id, error.c_str());
    std::printf("CRITERION %d %s (%.1fs): %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.what);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
