#include "rlab/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rlab/analytic/exponents.hpp"
#include "rlab/analytic/kernels.hpp"
#include "rlab/analytic/resolvent.hpp"
#include "rlab/pde/halfplane.hpp"
#include "rlab/pde/solvers.hpp"
#include "rlab/reversal/x_tilde.hpp"
#include "rlab/simulate/samplers.hpp"
#include "rlab/stats/duality.hpp"
#include "rlab/stats/tests.hpp"
#include "rlab/trace/trace.hpp"

namespace rlab::cli {

namespace {

std::string label(const std::string& base, std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os << base;
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  return os.str();
}

std::function<double(double)> exp_cdf(double rate) {
  return [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
}

VerificationReport& stamp(VerificationReport& rep, std::size_t n, std::uint64_t seed, double dt) {
  rep.n = n;
  rep.seed = seed;
  rep.dt = dt;
  return rep;
}

double pick_dt(double dt, double fallback) { return dt > 0.0 ? dt : fallback; }

double ilt_horizon(double r, double level) { return r > 0.0 ? std::max(10.0, 40.0 * level / std::sqrt(r)) : 100.0; }

ModelParams halfline(double r, double x0, double horizon, double dt) { return {r, x0, 0.0, horizon, dt}; }

VerificationReport max_report(std::string name, double worst, double tolerance, std::string details = {}) {
  VerificationReport rep;
  rep.name = std::move(name);
  rep.statistic = worst;
  rep.target = 0.0;
  rep.tolerance = tolerance;
  rep.passed = worst <= tolerance;
  rep.details = std::move(details);
  return rep;
}

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Relative gap of the exponents of two positive exponentials; exp() would
// multiply a one-ulp exponent difference by the exponent itself.
double exp_gap(double a, double b) { return a == b ? 0.0 : rel_gap(std::log(a), std::log(b)); }

Reports laplace_reports(const std::string& base, const std::vector<double>& samples, std::size_t censored, double r,
                        double level, const std::vector<double>& lambdas, std::size_t n, std::uint64_t seed,
                        double dt) {
  // Censored paths lie beyond 4 horizons and contribute e^{-lambda T} ~ 0.
  std::vector<double> all = samples;
  all.resize(samples.size() + censored, std::numeric_limits<double>::infinity());
  Reports out;
  for (double lambda : lambdas) {
    auto rep = sigma_report(label(base, {{"r", r}, {"level", level}, {"lambda", lambda}}),
                            empirical_laplace(all, lambda), inverse_local_time_laplace(lambda, level, r));
    stamp(rep, n, seed, dt);
    rep.details += " censored=" + std::to_string(censored);
    out.push_back(rep);
  }
  return out;
}

}  // namespace

Reports stationary_checks(double r, double horizon, double dt, std::size_t n, std::uint64_t seed, double alpha) {
  if (!(r > 0.0)) throw std::invalid_argument("stationary checks need r > 0");
  Reports out;
  const auto p = halfline(r, 0.0, horizon, dt);

  const auto xs = terminal_samples(ProcessKind::of(ProcessTag::ReflectedResetting, r), p, seed, n);
  auto ks = ks_test(EmpiricalDistribution(xs), [r](double y) { return stationary_cdf_halfline(y, r); }, alpha,
                    label("x_plus_terminal_vs_mu_plus_ks", {{"r", r}, {"T", horizon}}));
  out.push_back(stamp(ks, n, seed, dt));

  // X~ from mu+ stays at mu+.
  const auto q = halfline(r, 0.0, 1.0, dt);
  const auto xt = x_tilde_terminal_samples(q, seed + 1, n, true);
  auto ks_t = ks_test(EmpiricalDistribution(xt), [r](double y) { return stationary_cdf_halfline(y, r); }, alpha,
                      label("x_tilde_from_mu_plus_ks", {{"r", r}, {"t", 1.0}}));
  out.push_back(stamp(ks_t, n, seed + 1, dt));
  std::vector<double> fx(xt.size());
  std::transform(xt.begin(), xt.end(), fx.begin(), [](double y) { return std::exp(-y); });
  const double sr = std::sqrt(r);
  auto mean_t = sigma_report(label("x_tilde_from_mu_plus_mean_expneg", {{"r", r}, {"t", 1.0}}), sample_mean(fx),
                             sr / (1.0 + sr));
  out.push_back(stamp(mean_t, n, seed + 1, dt));

  // Reset counts on [0, T] are Poisson(rT).
  const auto counts = reset_counts(p, seed + 2, n);
  std::vector<double> c(counts.begin(), counts.end());
  const auto m = sample_mean(c);
  const double mu = r * horizon;
  auto mean_rep = sigma_report(label("reset_count_mean", {{"r", r}, {"T", horizon}}), m, mu);
  out.push_back(stamp(mean_rep, n, seed + 2, dt));
  double ss = 0.0;
  for (double v : c) ss += (v - m.mean) * (v - m.mean);
  const double var = ss / static_cast<double>(c.size() - 1);
  const double var_se = std::sqrt((mu + 2.0 * mu * mu) / static_cast<double>(c.size()));
  auto var_rep = closeness_report(label("reset_count_variance", {{"r", r}, {"T", horizon}}), var, mu, 3.0 * var_se);
  out.push_back(stamp(var_rep, n, seed + 2, dt));
  return out;
}

Reports inverse_local_time_checks(double r, double level, const std::vector<double>& lambdas, double dt,
                                  std::size_t n, std::uint64_t seed) {
  const auto p = halfline(r, 0.0, ilt_horizon(r, level), dt);
  const auto s = inverse_local_time_samples(ProcessKind::of(ProcessTag::ReflectedResetting, r), p, seed, n, level);
  return laplace_reports("x_plus_inverse_local_time_laplace", s.samples, s.censored, r, level, lambdas, n, seed, dt);
}

Reports composed_local_time_checks(double r, double level, const std::vector<double>& lambdas, double dt,
                                   std::size_t n, std::uint64_t seed, double alpha) {
  const auto p = halfline(r, 0.0, ilt_horizon(r, level), dt);
  const auto xt = composed_inverse_local_time_samples(p, seed + 1, n, level);
  Reports out =
      laplace_reports("x_tilde_composed_inverse_local_time_laplace", xt.samples, xt.censored, r, level, lambdas, n,
                      seed + 1, dt);
  const auto xp = inverse_local_time_samples(ProcessKind::of(ProcessTag::ReflectedResetting, r), p, seed, n, level);
  auto ks = ks_two_sample(EmpiricalDistribution(xp.samples), EmpiricalDistribution(xt.samples), alpha,
                          label("inverse_local_time_x_plus_vs_x_tilde_ks2", {{"r", r}, {"level", level}}));
  out.push_back(stamp(ks, n, seed, dt));
  return out;
}

Reports between_reset_checks(double r, std::size_t n, std::uint64_t seed, double alpha) {
  if (!(r > 0.0)) throw std::invalid_argument("between-reset checks need r > 0");
  const double dt = default_dt(r);
  const double sr = std::sqrt(r);
  const auto p = halfline(r, 0.0, 1.0, dt);
  Reports out;
  auto add_ks = [&](const std::vector<double>& xs, double rate, const std::string& name, std::uint64_t s) {
    auto rep = ks_test(EmpiricalDistribution(xs), exp_cdf(rate), alpha, label(name, {{"r", r}}));
    out.push_back(stamp(rep, xs.size(), s, dt));
  };
  const auto b = between_reset_samples(p, seed, n);
  add_ks(b.pre_reset_positions, sr, "pre_reset_position_ks", seed);
  add_ks(b.local_times, sr, "inter_reset_local_time_ks", seed);
  add_ks(b.gaps, r, "inter_reset_gap_ks", seed);
  const auto j = boundary_jump_samples(p, seed + 1, n);
  add_ks(j.sizes, sr, "x_tilde_boundary_jump_size_ks", seed + 1);
  add_ks(j.holding_local_times, sr, "x_tilde_zero_holding_local_time_ks", seed + 1);
  return out;
}

Reports hitting_time_checks(double r, double x0, double lambda, double dt, std::size_t n, std::uint64_t seed) {
  const double horizon = 50.0;
  const auto p = halfline(r, x0, horizon, dt);
  const auto s = hitting_time_samples(ProcessKind::of(ProcessTag::DriftedReflected, r), p, seed, n);
  // Unhit paths have tau > horizon and contribute e^{-lambda tau} ~ 0.
  std::vector<double> all = s.samples;
  all.resize(s.requested, std::numeric_limits<double>::infinity());
  Reports out;
  auto rep = sigma_report(label("drifted_hitting_time_laplace", {{"r", r}, {"x0", x0}, {"lambda", lambda}}),
                          empirical_laplace(all, lambda), hitting_time_laplace(lambda, x0, r));
  rep.details += " censored=" + std::to_string(s.censored);
  out.push_back(stamp(rep, n, seed, dt));
  if (r > 0.0) {
    const double frac = static_cast<double>(s.samples.size()) / static_cast<double>(n);
    VerificationReport hit;
    hit.name = label("drifted_hit_fraction", {{"r", r}, {"x0", x0}, {"T", horizon}});
    hit.statistic = frac;
    hit.target = 1.0;
    hit.tolerance = 1e-3;
    hit.passed = frac >= 0.999;
    out.push_back(stamp(hit, n, seed, dt));
  }
  return out;
}

Reports identity_checks() {
  Reports out;
  const std::vector<double> rs{0.0, 0.5, 1.0, 4.0};
  const auto grid = log_grid(1e-3, 1e3, 50);

  double worst = 0.0;
  for (double r : rs)
    for (double l : grid) worst = std::max(worst, psi_phi_identity_residual(l, r));
  out.push_back(max_report("psi_shift_equals_phi_relative", worst, 1e-12, "50-point log grid on [1e-3, 1e3], r in {0, 0.5, 1, 4}"));

  const std::vector<double> lambdas{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  double lk = 0.0;
  double tail = 0.0;
  for (double r : rs) {
    for (double l : lambdas) {
      lk = std::max(lk, std::abs(levy_khintchine({LevyKind::PiPhi, r}, 0.0, l) - phi(l, r)));
      lk = std::max(lk, std::abs(levy_khintchine({LevyKind::PiPsi, r}, 1.0, l) - psi(l, r)));
      tail = std::max(tail, tail_symbol_residual({ExponentKind::Phi, r}, l));
      tail = std::max(tail, tail_symbol_residual({ExponentKind::Psi, r}, l));
    }
  }
  out.push_back(max_report("levy_khintchine_residual", lk, 1e-6));
  out.push_back(max_report("tail_symbol_residual", tail, 1e-6));

  bool bern = true;
  for (double r : rs) {
    for (auto kind : {ExponentKind::Phi, ExponentKind::Psi}) bern = bern && check_bernstein({kind, r}, grid).ok;
  }
  out.push_back(max_report("bernstein_sign_pattern_violations", bern ? 0.0 : 1.0, 0.0));

  double k12 = 0.0;
  double kdn = 0.0;
  double kq = 0.0;
  for (double r : rs) {
    for (int i = 0; i <= 200; ++i) {
      const double xi = -10.0 + 0.1 * i;
      const double k1 = boundary_symbol(HalfPlaneProblem::P1, xi, r);
      const double k2 = boundary_symbol(HalfPlaneProblem::P2, xi, r);
      k12 = std::max(k12, std::abs(k1 - k2));
      kdn = std::max(kdn, std::abs(k1 - dn_symbol(xi, r)));
      if (r > 0.0 && i % 10 == 0) kq = std::max(kq, std::abs(boundary_symbol_p2_quadrature(xi, r) - k1));
    }
  }
  out.push_back(max_report("k1_vs_k2_symbol", k12, 1e-10, "xi in [-10, 10] step 0.1"));
  out.push_back(max_report("k1_vs_dn_symbol", kdn, 1e-10));
  out.push_back(max_report("k2_quadrature_assembly_vs_k1", kq, 1e-8));
  return out;
}

Reports pde_checks(double r, double dt, std::size_t n, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("pde checks need r > 0");
  Reports out;
  const RealFn f = [](double y) { return std::exp(-y); };
  const FDGrid grid = default_grid(r, 1.0);
  const FDSolution neu = solve_resetting_neumann(f, r, grid);
  const FDSolution nl = solve_nlbvp(f, r, grid);
  const std::vector<std::pair<double, double>> points{{0.5, 0.2}, {1.0, 0.5}, {1.0, 1.0}};
  std::uint64_t s = seed;
  for (const auto& [t, x] : points) {
    const auto p = halfline(r, x, t, dt);
    for (int which = 0; which < 2; ++which) {
      const auto xs = which == 0 ? terminal_samples(ProcessKind::of(ProcessTag::ReflectedResetting, r), p, s, n)
                                 : x_tilde_terminal_samples(p, s, n, false);
      std::vector<double> fx(xs.size());
      std::transform(xs.begin(), xs.end(), fx.begin(), f);
      const auto m = sample_mean(fx);
      const double fd = (which == 0 ? neu : nl).value_at(t, x);
      auto rep = closeness_report(
          label(which == 0 ? "neumann_fd_vs_mc_x_plus" : "nlbvp_fd_vs_mc_x_tilde", {{"r", r}, {"t", t}, {"x", x}}),
          m.mean, fd, 3.0 * m.std_error + 1e-3);
      rep.details = "std_error=" + std::to_string(m.std_error);
      out.push_back(stamp(rep, n, s, dt));
      ++s;
    }
  }
  for (const auto& [tag, sol] : {std::pair{"neumann", &neu}, std::pair{"nlbvp", &nl}}) {
    const auto mp = check_max_principle(*sol, f);
    out.push_back(max_report(std::string(tag) + "_max_principle_excess", mp.worst_excess, 1e-12, sol->scheme));
    double drift = 0.0;
    const double s0 = stationary_functional(*sol, 0, r);
    for (int k = 1; k <= sol->grid.nt; ++k) drift = std::max(drift, std::abs(stationary_functional(*sol, k, r) - s0));
    out.push_back(max_report(std::string(tag) + "_stationary_functional_drift", drift, 1e-4, sol->scheme));
  }
  const double lambda = 2.0;
  const FDGrid long_grid = default_grid(r, 8.0);
  const std::vector<double> xs{0.0, 0.2, 0.5, 1.0, 2.0};
  for (auto problem : {PdeProblem::Neumann, PdeProblem::Nlbvp}) {
    const auto rc = resolvent_consistency_check(problem, f, lambda, r, long_grid, xs);
    out.push_back(max_report(label(problem == PdeProblem::Neumann ? "neumann_resolvent_residual" : "nlbvp_resolvent_residual",
                                   {{"r", r}, {"lambda", lambda}}),
                             rc.sup_residual, 1e-3, rc.truncation_warning ? "truncation warning" : ""));
  }
  return out;
}

Reports duality_checks(double r, double t, double dt, std::size_t n, std::uint64_t seed) {
  if (!(r > 0.0)) throw std::invalid_argument("duality checks need r > 0");
  const auto p = halfline(r, 0.0, t, dt);
  const auto kind = ProcessKind::of(ProcessTag::ReflectedResetting, r);
  const auto xt = x_tilde_start_end_pairs(p, seed, n);
  const auto xp = stationary_start_end_pairs(kind, p, seed + 1, n);
  const Cellization cells;
  Reports out;
  auto dual = tv_two_sample_test(xt, transposed(xp), cells, seed + 3, label("duality_tv_x_tilde_vs_x_plus_transposed", {{"r", r}, {"t", t}}));
  out.push_back(stamp(dual, 2 * n, seed, dt));

  const auto xp2 = stationary_start_end_pairs(kind, p, seed + 2, n);
  const auto ctrl = tv_two_sample_test(xp, transposed(xp2), cells, seed + 4);
  VerificationReport neg = ctrl;
  neg.name = label("non_reversibility_control_tv_x_plus_vs_x_plus_transposed", {{"r", r}, {"t", t}});
  neg.passed = !ctrl.passed;
  neg.details = "passes when TV exceeds the null threshold; " + ctrl.details;
  out.push_back(stamp(neg, 2 * n, seed + 1, dt));
  return out;
}

Reports trace_checks(double r, double t_trace, const std::vector<double>& xis, double dt, std::size_t n,
                     std::uint64_t seed, double alpha, bool with_oracle) {
  const double horizon = r > 0.0 ? std::max(10.0, 20.0 * t_trace / std::sqrt(r)) : 25.0 * t_trace * t_trace;
  const auto p = halfline(r, 0.0, horizon, dt);
  Reports out;
  auto cf_reports = [&](const TraceSet& set, const char* name, std::uint64_t s) {
    for (double xi : xis) {
      const auto cf = trace_cf_estimate(set, xi);
      const double target = trace_cf_target(xi, t_trace, r);
      auto re = sigma_report(label(std::string(name) + "_cf_real", {{"r", r}, {"t", t_trace}, {"xi", xi}}),
                             {cf.mean.real(), cf.std_error_real}, target);
      re.details += " censored=" + std::to_string(set.censored);
      out.push_back(stamp(re, n, s, dt));
      auto im = sigma_report(label(std::string(name) + "_cf_imag", {{"r", r}, {"t", t_trace}, {"xi", xi}}),
                             {cf.mean.imag(), cf.std_error_imag}, 0.0);
      out.push_back(stamp(im, n, s, dt));
    }
  };
  const auto t1 = sample_trace(TraceKind::T1, p, seed, n, t_trace);
  cf_reports(t1, "trace_t1", seed);
  if (r > 0.0) {
    const auto t2 = sample_trace(TraceKind::T2, p, seed + 1, n, t_trace);
    cf_reports(t2, "trace_t2", seed + 1);
    auto ks = ks_two_sample(EmpiricalDistribution(t1.values()), EmpiricalDistribution(t2.values()), alpha,
                            label("trace_t1_vs_t2_ks2", {{"r", r}, {"t", t_trace}}));
    out.push_back(stamp(ks, n, seed, dt));
  }
  if (with_oracle) {
    const auto oracle = truncated_levy_trace_oracle(r, t_trace, seed + 2, n);
    auto ks = ks_two_sample(EmpiricalDistribution(t1.values()), EmpiricalDistribution(oracle), alpha,
                            label("trace_t1_vs_truncated_levy_oracle_ks2", {{"r", r}, {"t", t_trace}}));
    out.push_back(stamp(ks, n, seed, dt));
  }
  return out;
}

Reports collapse_checks(double dt, std::size_t n, std::uint64_t seed) {
  Reports out;
  const auto p = halfline(0.0, 0.5, 1.0, dt);
  std::size_t mismatched = 0;
  std::size_t jumps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const RngStreamSpec rng{seed, i};
    const auto bplus = simulate(ProcessKind::of(ProcessTag::ReflectedBM, 0.0), p, rng);
    const auto xplus = simulate(ProcessKind::of(ProcessTag::ReflectedResetting, 0.0), p, rng);
    const auto xt = build_x_tilde(p, rng);
    const auto free_bm = simulate(ProcessKind::of(ProcessTag::FreeBM, 0.0), p, rng);
    const auto free_x = simulate(ProcessKind::of(ProcessTag::FreeResetting, 0.0), p, rng);
    if (xplus.path.times != bplus.path.times || xplus.path.values != bplus.path.values ||
        xplus.local_time != bplus.local_time)
      ++mismatched;
    if (xt.path.times != bplus.path.times || xt.path.values != bplus.path.values || xt.gamma_tilde != bplus.local_time)
      ++mismatched;
    if (free_x.path.values != free_bm.path.values) ++mismatched;
    jumps += xt.path.events.boundary_jumps.size() + xplus.path.events.reset_times.size();
  }
  auto path_rep = max_report("r0_pathwise_mismatches_vs_reflected_bm", static_cast<double>(mismatched), 0.0);
  out.push_back(stamp(path_rep, n, seed, dt));
  auto jump_rep = max_report("r0_resets_and_boundary_jumps", static_cast<double>(jumps), 0.0);
  out.push_back(stamp(jump_rep, n, seed, dt));

  // Closed forms at r = 0, compared up to rounding of the r > 0 expressions.
  double worst = 0.0;
  for (double l : log_grid(1e-3, 1e3, 25)) {
    worst = std::max(worst, rel_gap(phi(l, 0.0), std::sqrt(l)));
    worst = std::max(worst, rel_gap(psi(l, 0.0), l));
    worst = std::max(worst, rel_gap(LaplaceExponent{ExponentKind::Phi, 0.0}(l), LaplaceExponent{ExponentKind::HalfStable, 0.0}(l)));
    worst = std::max(worst, rel_gap(LaplaceExponent{ExponentKind::DriftedBM, 0.0}(l), std::sqrt(l)));
    for (double x : {0.0, 0.5, 2.0}) {
      worst = std::max(worst, exp_gap(hitting_time_laplace(l, x, 0.0), std::exp(-x * std::sqrt(l))));
      worst = std::max(worst, exp_gap(inverse_local_time_laplace(l, x, 0.0), std::exp(-x * std::sqrt(l))));
    }
  }
  for (double z : {1e-3, 0.1, 1.0, 10.0}) {
    worst = std::max(worst, std::abs(LevyMeasure{LevyKind::PiPsi, 0.0}.density(z)));
    worst = std::max(worst, rel_gap(LevyMeasure{LevyKind::PiPhi, 0.0}.density(z),
                                    1.0 / (2.0 * std::sqrt(std::numbers::pi) * std::pow(z, 1.5))));
  }
  worst = std::max(worst, LevyMeasure{LevyKind::PiPsi, 0.0}.total_mass());
  for (int i = 0; i <= 40; ++i) {
    const double xi = -10.0 + 0.5 * i;
    worst = std::max(worst, rel_gap(dn_symbol(xi, 0.0), -std::abs(xi)));
    worst = std::max(worst, exp_gap(trace_cf_target(xi, 1.0, 0.0), std::exp(-std::abs(xi))));
    for (double y : {0.0, 0.5, 2.0}) {
      worst = std::max(worst, exp_gap(halfplane_multiplier(HalfPlaneProblem::P1, xi, y, 0.0), std::exp(-y * std::abs(xi))));
      worst = std::max(worst, exp_gap(halfplane_multiplier(HalfPlaneProblem::P2, xi, y, 0.0), std::exp(-y * std::abs(xi))));
    }
  }
  for (double t : {0.1, 1.0}) {
    for (double x : {0.0, 0.7}) {
      for (double y : {0.0, 0.3, 1.5}) {
        const double ref = reflected_bm_density(t, x, y);
        worst = std::max(worst, rel_gap(drifted_reflected_density(t, x, y, 0.0), ref));
        worst = std::max(worst, rel_gap(resetting_density_reflected(t, x, y, 0.0), ref));
        worst = std::max(worst, rel_gap(resetting_density_free(t, x, 0.0, y, 0.0), heat_kernel(t, y - x)));
      }
    }
  }
  out.push_back(max_report("r0_closed_forms_relative", worst, 4.0 * std::numeric_limits<double>::epsilon(),
                           "Phi, Psi, Pi, hitting and inverse local time transforms, symbols, multipliers, densities"));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"stationary", "localtime", "reversal", "duality",
                                              "pde",        "trace",     "identities", "all"};
  return names;
}

Reports run_suite(const std::string& name, const SuiteConfig& cfg) {
  const double r = cfg.r;
  const std::size_t n = cfg.paths;
  const std::uint64_t seed = cfg.seed;
  const std::vector<double> lambdas{0.5, 1.0, 3.0};
  if (name == "stationary") {
    const double horizon = 20.0 * std::max(1.0, 1.0 / r);
    return stationary_checks(r, horizon, pick_dt(cfg.dt, default_dt(r)), n, seed, cfg.alpha);
  }
  if (name == "localtime") {
    const double dt = pick_dt(cfg.dt, default_dt(r));
    auto out = inverse_local_time_checks(r, 0.5, lambdas, dt, n, seed);
    auto more = composed_local_time_checks(r, 0.5, lambdas, dt, n, seed, cfg.alpha);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }
  if (name == "reversal") {
    auto out = between_reset_checks(r, n, seed, cfg.alpha);
    auto hit = hitting_time_checks(r, 1.0, 3.0, pick_dt(cfg.dt, default_dt(r)), n, seed + 10);
    out.insert(out.end(), hit.begin(), hit.end());
    auto col = collapse_checks(pick_dt(cfg.dt, 1e-3), 20, seed + 20);
    out.insert(out.end(), col.begin(), col.end());
    return out;
  }
  if (name == "duality") return duality_checks(r, 0.5, pick_dt(cfg.dt, 1e-3), n, seed);
  if (name == "pde") return pde_checks(r, pick_dt(cfg.dt, 1e-3), n, seed);
  if (name == "trace") return trace_checks(r, 1.0, {0.5, 1.0, 2.0}, pick_dt(cfg.dt, 1e-3), n, seed, cfg.alpha, r > 0.0);
  if (name == "identities") return identity_checks();
  if (name == "all") {
    Reports out;
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["name"] = rep.name;
  j["statistic"] = rep.statistic;
  j["target"] = rep.target;
  j["tolerance"] = rep.tolerance;
  j["passed"] = rep.passed;
  j["n"] = rep.n;
  j["seed"] = rep.seed;
  j["dt"] = std::isfinite(rep.dt) ? nlohmann::json(rep.dt) : nlohmann::json(nullptr);
  j["p_value"] = std::isfinite(rep.p_value) ? nlohmann::json(rep.p_value) : nlohmann::json(nullptr);
  j["details"] = rep.details;
  return j;
}

bool all_passed(const Reports& reps) {
  return std::all_of(reps.begin(), reps.end(), [](const VerificationReport& r) { return r.passed; });
}

}  // namespace rlab::cli
