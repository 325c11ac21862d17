#include "rlab/cli/app.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "rlab/analytic/exponents.hpp"
#include "rlab/analytic/kernels.hpp"
#include "rlab/analytic/resolvent.hpp"
#include "rlab/core/io.hpp"
#include "rlab/core/parallel.hpp"
#include "rlab/pde/solvers.hpp"
#include "rlab/reversal/x_tilde.hpp"
#include "rlab/simulate/samplers.hpp"
#include "rlab/trace/trace.hpp"

namespace rlab::cli {

namespace {

// Thrown for bad flag values found after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t as_count(double v, const char* flag, double min = 0.0) {
  if (!std::isfinite(v) || v < min || v != std::floor(v) || v > 9007199254740992.0) {
    throw UsageError(std::string(flag) + " must be an integer >= " + std::to_string(static_cast<long long>(min)));
  }
  return static_cast<std::size_t>(v);
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void require(const std::vector<std::string>& errors) {
  if (errors.empty()) return;
  std::string msg;
  for (const auto& e : errors) msg += (msg.empty() ? "" : "; ") + e;
  throw UsageError(msg);
}

RealFn parse_test_function(const std::string& spec) {
  if (spec == "expneg") return [](double y) { return std::exp(-y); };
  if (spec == "gauss") return [](double y) { return std::exp(-y * y); };
  const std::string prefix = "indicator:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto body = spec.substr(prefix.size());
    const auto comma = body.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const double a = std::stod(body.substr(0, comma), &used_a);
        const double b = std::stod(body.substr(comma + 1), &used_b);
        if (used_a == comma && used_b == body.size() - comma - 1 && a < b) {
          return [a, b](double y) { return y >= a && y <= b ? 1.0 : 0.0; };
        }
      } catch (const std::exception&) {
      }
    }
  }
  throw UsageError("--f must be expneg, gauss or indicator:a,b with a < b");
}

nlohmann::json params_json(const ModelParams& p) {
  return {{"r", p.r}, {"x0", p.x0}, {"x_r", p.x_r}, {"horizon", p.horizon}, {"dt", p.dt}};
}

void print_reports(const Reports& reps, const nlohmann::json& config, const std::string& format,
                   const std::string& report_path) {
  const std::string lines = report_lines(reps, config);
  if (!report_path.empty()) atomic_write_file(report_path, lines);
  if (format == "json") std::cout << lines;
  else std::cout << report_table(reps);
}

// ---- subcommands ----

struct SimulateArgs {
  std::string kind = "x+";
  double r = 0.0;
  double x0 = 0.0;
  double x_r = 0.0;
  double horizon = 1.0;
  double dt = 0.0;
  double paths = 1;
  double seed = 1;
  std::string scheme = "bridge";
  std::string out;
  std::string events_out;
};

int cmd_simulate(const SimulateArgs& a) {
  ProcessTag tag{};
  if (!parse_process_tag(a.kind, tag)) throw UsageError("unknown --kind '" + a.kind + "'");
  const auto kind = ProcessKind::of(tag, a.r);
  const ModelParams p{a.r, a.x0, a.x_r, a.horizon, a.dt > 0.0 ? a.dt : default_dt(a.r)};
  require(validate_params(p, kind.reflected()));
  if (!kind.resetting() && a.r != 0.0 && tag != ProcessTag::DriftedReflected) {
    throw UsageError("--r applies only to resetting kinds and btilde");
  }
  const auto n = as_count(a.paths, "--paths", 1);
  const auto seed = as_count(a.seed, "--seed");
  const auto scheme = a.scheme == "clamp" ? ReflectionScheme::Clamp : ReflectionScheme::BridgeMinimum;

  std::vector<AugmentedPath> paths(n);
  parallel_for(n, [&](std::size_t i) { paths[i] = simulate(kind, p, {seed, i}, scheme); });

  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    for (std::size_t i = 0; i < n; ++i) {
      std::ostringstream name;
      name << "path_" << std::setw(6) << std::setfill('0') << i << ".csv";
      atomic_write_file(std::filesystem::path(a.out) / name.str(),
                        kind.reflected() ? path_csv(paths[i]) : path_csv(paths[i].path));
    }
  }
  nlohmann::json events = nlohmann::json::array();
  std::size_t resets = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = to_json(paths[i].path.events);
    e["path"] = i;
    events.push_back(e);
    resets += paths[i].path.events.reset_times.size();
  }
  if (!a.events_out.empty()) atomic_write_file(a.events_out, events.dump(2) + "\n");

  nlohmann::json summary{{"command", "simulate"},
                         {"kind", to_string(tag)},
                         {"params", params_json(p)},
                         {"paths", n},
                         {"seed", seed},
                         {"scheme", a.scheme},
                         {"total_resets", resets}};
  std::cout << summary.dump() << "\n";
  return kPass;
}

struct ReverseArgs {
  double r = 1.0;
  double x0 = 0.0;
  std::string init = "point";
  double horizon = 1.0;
  double dt = 0.0;
  double paths = 1;
  double seed = 1;
  std::string out;
  std::string events_out;
};

int cmd_reverse(const ReverseArgs& a) {
  const ModelParams p{a.r, a.x0, 0.0, a.horizon, a.dt > 0.0 ? a.dt : default_dt(a.r)};
  require(validate_params(p, true));
  if (a.init == "stationary" && !(a.r > 0.0)) throw UsageError("--init stationary needs --r > 0");
  const auto n = as_count(a.paths, "--paths", 1);
  const auto seed = as_count(a.seed, "--seed");

  std::vector<ReversedPath> paths(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    ModelParams q = p;
    if (a.init == "stationary") q.x0 = stationary_start(p.r, rng);
    paths[i] = build_x_tilde(q, rng);
  });
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    for (std::size_t i = 0; i < n; ++i) {
      std::ostringstream name;
      name << "path_" << std::setw(6) << std::setfill('0') << i << ".csv";
      atomic_write_file(std::filesystem::path(a.out) / name.str(), path_csv(paths[i].path, paths[i].gamma_tilde));
    }
  }
  nlohmann::json events = nlohmann::json::array();
  std::size_t jumps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto e = to_json(paths[i].path.events);
    e["path"] = i;
    e["x0"] = paths[i].path.values.front();
    events.push_back(e);
    jumps += paths[i].path.events.boundary_jumps.size();
  }
  if (!a.events_out.empty()) atomic_write_file(a.events_out, events.dump(2) + "\n");
  nlohmann::json summary{{"command", "reverse"}, {"params", params_json(p)}, {"init", a.init},
                         {"paths", n},           {"seed", seed},             {"total_boundary_jumps", jumps}};
  std::cout << summary.dump() << "\n";
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  double r = 1.0;
  double paths = 100000;
  double seed = 1;
  double dt = 0.0;
  double alpha = 0.01;
  std::string report;
  std::string format = "table";
};

int cmd_verify(const VerifyArgs& a) {
  if (!std::isfinite(a.r) || a.r < 0.0) throw UsageError("r must be ≥ 0");
  if (!std::isfinite(a.dt) || a.dt < 0.0) throw UsageError("--dt must be >= 0 (0 picks per-check defaults)");
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("--alpha must be in (0, 1)");
  SuiteConfig cfg;
  cfg.r = a.r;
  cfg.paths = as_count(a.paths, "--paths", 100);
  cfg.seed = as_count(a.seed, "--seed");
  cfg.dt = a.dt;
  cfg.alpha = a.alpha;
  const auto reps = run_suite(a.suite, cfg);
  const nlohmann::json config{{"command", "verify"}, {"suite", a.suite}, {"r", cfg.r},     {"paths", cfg.paths},
                              {"seed", cfg.seed},    {"dt", cfg.dt},     {"alpha", cfg.alpha}};
  print_reports(reps, config, a.format, a.report);
  return all_passed(reps) ? kPass : kVerificationFailure;
}

struct PdeArgs {
  std::string problem = "neumann";
  double r = 1.0;
  std::string f = "expneg";
  double x_max = 0.0;
  double nx = 0;
  double nt = 0;
  double t_max = 1.0;
  double dx = 0.01;
  double dt = 1e-3;
  double t_stride = 10;
  std::string out;
};

int cmd_pde(const PdeArgs& a) {
  const RealFn f = parse_test_function(a.f);
  if (!std::isfinite(a.r) || a.r < 0.0) throw UsageError("r must be ≥ 0");
  if (a.problem == "nlbvp" && !(a.r > 0.0)) throw UsageError("nlbvp needs --r > 0");
  if (!(a.t_max > 0.0) || !(a.dx > 0.0) || !(a.dt > 0.0)) throw UsageError("--t-max, --dx and --dt must be > 0");
  FDGrid g = default_grid(a.r, a.t_max, a.dx, a.dt);
  if (a.x_max > 0.0) g.x_max = a.x_max;
  if (a.nx > 0) g.nx = static_cast<int>(as_count(a.nx, "--nx", 16));
  if (a.nt > 0) g.nt = static_cast<int>(as_count(a.nt, "--nt", 1));
  require(validate_grid(g, a.r));
  const auto stride = static_cast<int>(as_count(a.t_stride, "--t-stride", 1));

  const FDSolution sol = a.problem == "nlbvp" ? solve_nlbvp(f, a.r, g) : solve_resetting_neumann(f, a.r, g);
  const auto mp = check_max_principle(sol, f);
  if (!a.out.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "t,x,u\n";
    for (int k = 0; k <= g.nt; ++k) {
      if (k % stride != 0 && k != g.nt) continue;
      for (int i = 0; i < g.nx; ++i) os << sol.t(k) << ',' << sol.x(i) << ',' << sol.at(k, i) << '\n';
    }
    atomic_write_file(a.out, os.str());
  }
  nlohmann::json summary{{"command", "pde"},
                         {"problem", a.problem},
                         {"r", a.r},
                         {"f", a.f},
                         {"scheme", sol.scheme},
                         {"grid", {{"x_max", g.x_max}, {"nx", g.nx}, {"nt", g.nt}, {"t_max", g.t_max}}},
                         {"max_principle_ok", mp.ok},
                         {"max_principle_excess", mp.worst_excess},
                         {"u_final_at_0", sol.at(g.nt, 0)}};
  std::cout << summary.dump() << "\n";
  return mp.ok ? kPass : kVerificationFailure;
}

struct TraceArgs {
  std::string which = "t1";
  double r = 1.0;
  double t = 1.0;
  double paths = 10000;
  double seed = 1;
  double dt = 1e-3;
  double horizon = 0.0;
  std::string out;
};

double trace_horizon(double r, double t, double given) {
  if (given > 0.0) return given;
  return r > 0.0 ? std::max(10.0, 20.0 * t / std::sqrt(r)) : 25.0 * t * t;
}

int cmd_trace(const TraceArgs& a) {
  if (!std::isfinite(a.r) || a.r < 0.0) throw UsageError("r must be ≥ 0");
  if (!(a.t > 0.0)) throw UsageError("--t must be > 0");
  const auto n = as_count(a.paths, "--paths", 1);
  const auto seed = as_count(a.seed, "--seed");
  const ModelParams p{a.r, 0.0, 0.0, trace_horizon(a.r, a.t, a.horizon), a.dt};
  require(validate_params(p, true));
  std::ostringstream os;
  os.precision(17);
  nlohmann::json summary{{"command", "trace"}, {"which", a.which}, {"r", a.r}, {"t", a.t}, {"paths", n},
                         {"seed", seed}};
  if (a.which == "oracle") {
    const auto v = truncated_levy_trace_oracle(a.r, a.t, seed, n);
    os << "which,t,value,stopping_time\n";
    for (double x : v) os << "oracle," << a.t << ',' << x << ",\n";
    summary["censored"] = 0;
  } else {
    const auto set = sample_trace(a.which == "t2" ? TraceKind::T2 : TraceKind::T1, p, seed, n, a.t);
    os << "which,t,value,stopping_time\n";
    for (std::size_t i = 0; i < set.samples.size(); ++i) {
      os << a.which << ',' << set.samples[i].t << ',' << set.samples[i].value << ',' << set.stopping_times[i] << '\n';
    }
    summary["censored"] = set.censored;
    summary["params"] = params_json(p);
  }
  if (!a.out.empty()) atomic_write_file(a.out, os.str());
  std::cout << summary.dump() << "\n";
  return kPass;
}

struct TraceVerifyArgs {
  double r = 1.0;
  double t = 1.0;
  double paths = 100000;
  double seed = 1;
  double dt = 1e-3;
  std::vector<double> xi{0.5, 1.0, 2.0};
  bool oracle = false;
  double alpha = 0.01;
  std::string report;
  std::string format = "table";
};

int cmd_trace_verify(const TraceVerifyArgs& a) {
  if (!std::isfinite(a.r) || a.r < 0.0) throw UsageError("r must be ≥ 0");
  if (!(a.t > 0.0)) throw UsageError("--t must be > 0");
  if (!(a.dt > 0.0)) throw UsageError("--dt must be > 0");
  const auto n = as_count(a.paths, "--paths", 100);
  const auto seed = as_count(a.seed, "--seed");
  const auto reps = trace_checks(a.r, a.t, a.xi, a.dt, n, seed, a.alpha, a.oracle);
  const nlohmann::json config{{"command", "trace-verify"}, {"r", a.r}, {"t", a.t},   {"paths", n},
                              {"seed", seed},               {"dt", a.dt}, {"xi", a.xi}, {"oracle", a.oracle}};
  print_reports(reps, config, a.format, a.report);
  return all_passed(reps) ? kPass : kVerificationFailure;
}

struct AnalyticArgs {
  bool check = false;
  std::string table;
  double r = 1.0;
  double lo = 1e-3;
  double hi = 1e3;
  double n = 50;
  bool log = false;
  std::string out;
  std::string format = "table";
};

int cmd_analytic(const AnalyticArgs& a) {
  if (!a.check && a.table.empty()) throw UsageError("analytic needs --check or --table NAME");
  int code = kPass;
  if (a.check) {
    const auto reps = identity_checks();
    if (a.format == "json") std::cout << report_lines(reps, {{"command", "analytic --check"}});
    else std::cout << report_table(reps);
    code = all_passed(reps) ? kPass : kVerificationFailure;
  }
  if (!a.table.empty()) {
    if (!std::isfinite(a.r) || a.r < 0.0) throw UsageError("r must be ≥ 0");
    const auto n = static_cast<int>(as_count(a.n, "--n", 2));
    if (!(a.hi > a.lo) || (a.log && !(a.lo > 0.0))) throw UsageError("need lo < hi (and lo > 0 with --log)");
    const double r = a.r;
    const std::map<std::string, std::function<double(double)>> fns{
        {"phi", [r](double l) { return phi(l, r); }},
        {"psi", [r](double l) { return psi(l, r); }},
        {"dn_symbol", [r](double xi) { return dn_symbol(xi, r); }},
        {"stationary_density", [r](double y) { return stationary_density_halfline(y, r); }},
        {"pi_phi", [r](double z) { return LevyMeasure{LevyKind::PiPhi, r}.density(z); }},
        {"pi_psi", [r](double z) { return LevyMeasure{LevyKind::PiPsi, r}.density(z); }},
        {"hitting_laplace_x1", [r](double l) { return hitting_time_laplace(l, 1.0, r); }},
        {"reflected_density_t1_x0", [r](double y) { return resetting_density_reflected(1.0, 0.0, y, r); }},
    };
    const auto it = fns.find(a.table);
    if (it == fns.end()) {
      std::string names;
      for (const auto& [k, v] : fns) names += (names.empty() ? "" : ", ") + k;
      throw UsageError("unknown --table; one of: " + names);
    }
    const auto grid = a.log ? log_grid(a.lo, a.hi, n) : [&] {
      std::vector<double> g(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = a.lo + (a.hi - a.lo) * i / (n - 1);
      return g;
    }();
    std::ostringstream os;
    os.precision(17);
    os << "grid,value\n";
    for (double x : grid) os << x << ',' << it->second(x) << '\n';
    if (a.out.empty()) std::cout << os.str();
    else atomic_write_file(a.out, os.str());
  }
  return code;
}

const char* kSuiteHelp =
    "Suites:\n"
    "  stationary  terminal law of the reflected resetting process against Exp(sqrt r); reversed process\n"
    "              started at equilibrium stays there; reset counts are Poisson(rT)\n"
    "  localtime   inverse local time of both processes against exp(-x lambda/sqrt(lambda+r)), and a\n"
    "              two-sample KS between them\n"
    "  reversal    laws between resets and between boundary jumps, hitting time of the drifted\n"
    "              reflected BM, and the r = 0 collapse\n"
    "  duality     two-point total-variation test of the duality relation, with the\n"
    "              non-reversibility control\n"
    "  pde         finite-difference solvers against Monte Carlo, maximum principle, resolvents\n"
    "  trace       trace processes T1 and T2: two-sample KS, characteristic functions, Levy oracle\n"
    "  identities  closed-form identities between exponents, Levy measures and boundary symbols\n"
    "  all         every suite above\n";

}  // namespace

std::string report_lines(const Reports& reps, const nlohmann::json& config) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : reps) {
    out += to_json(r).dump() + "\n";
    passed += r.passed ? 1 : 0;
  }
  const nlohmann::json summary{{"summary", true},
                               {"config", config},
                               {"reports", reps.size()},
                               {"passed", passed},
                               {"failed", reps.size() - passed},
                               {"ok", passed == reps.size()},
                               {"threads", worker_count()},
                               {"timestamp", utc_now()}};
  out += summary.dump() + "\n";
  return out;
}

std::string report_table(const Reports& reps) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "ok" << std::setw(72) << "check" << std::right << std::setw(15) << "statistic"
     << std::setw(15) << "target" << std::setw(13) << "tolerance" << std::setw(11) << "p" << '\n';
  std::size_t passed = 0;
  for (const auto& r : reps) {
    passed += r.passed ? 1 : 0;
    os << std::left << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(72) << r.name << std::right
       << std::setprecision(6) << std::setw(15) << r.statistic << std::setw(15) << r.target << std::setw(13)
       << r.tolerance << std::setw(11);
    if (std::isfinite(r.p_value)) os << r.p_value;
    else os << "-";
    os << '\n';
  }
  os << passed << "/" << reps.size() << " checks passed\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Simulation and verification of reflecting Brownian motion with Poissonian resetting,\n"
               "its time reversal with a non-local boundary condition, and their boundary traces."};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  std::function<int()> action;

  SimulateArgs sa;
  auto* sim = app.add_subcommand("simulate", "Simulate B, B+, X, X+ or the drifted reflected BM");
  sim->add_option("--kind", sa.kind, "bm, bm+, x, x+, btilde (or the full names)")->capture_default_str();
  sim->add_option("--r", sa.r, "Resetting rate")->capture_default_str();
  sim->add_option("--x0", sa.x0, "Start position")->capture_default_str();
  sim->add_option("--x-r", sa.x_r, "Resetting point (free kinds only)")->capture_default_str();
  sim->add_option("--T", sa.horizon, "Horizon")->capture_default_str();
  sim->add_option("--dt", sa.dt, "Time step (default 1e-4 max(1, 1/r))");
  sim->add_option("--paths", sa.paths, "Number of paths")->capture_default_str();
  sim->add_option("--seed", sa.seed, "Master seed")->capture_default_str();
  sim->add_option("--scheme", sa.scheme, "Reflection scheme")->check(CLI::IsMember({"bridge", "clamp"}))->capture_default_str();
  sim->add_option("--out", sa.out, "Directory for path_NNNNNN.csv files (t,x[,gamma])");
  sim->add_option("--events-out", sa.events_out, "JSON file with one event log per path");
  sim->callback([&] { action = [&] { return cmd_simulate(sa); }; });

  ReverseArgs ra;
  auto* rev = app.add_subcommand("reverse", "Simulate the reversed process X~ = B~ + R(gamma~)");
  rev->add_option("--r", ra.r, "Resetting rate")->capture_default_str();
  rev->add_option("--x0", ra.x0, "Start position")->capture_default_str();
  rev->add_option("--init", ra.init, "point (use --x0) or stationary")->check(CLI::IsMember({"point", "stationary"}))->capture_default_str();
  rev->add_option("--T", ra.horizon, "Horizon")->capture_default_str();
  rev->add_option("--dt", ra.dt, "Time step (default 1e-4 max(1, 1/r))");
  rev->add_option("--paths", ra.paths, "Number of paths")->capture_default_str();
  rev->add_option("--seed", ra.seed, "Master seed")->capture_default_str();
  rev->add_option("--out", ra.out, "Directory for path CSV files (t,x,gamma)");
  rev->add_option("--events-out", ra.events_out, "JSON file with event logs, boundary jumps included");
  rev->callback([&] { action = [&] { return cmd_reverse(ra); }; });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->footer(kSuiteHelp);
  ver->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--r", va.r, "Resetting rate")->capture_default_str();
  ver->add_option("--paths", va.paths, "Monte Carlo paths per check")->capture_default_str();
  ver->add_option("--seed", va.seed, "Master seed")->capture_default_str();
  ver->add_option("--dt", va.dt, "Time step for every check (0 keeps per-check defaults)")->capture_default_str();
  ver->add_option("--alpha", va.alpha, "Significance level of KS tests")->capture_default_str();
  ver->add_option("--report", va.report, "JSON-lines report file");
  ver->add_option("--format", va.format, "Console format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  ver->callback([&] { action = [&] { return cmd_verify(va); }; });

  PdeArgs pa;
  auto* pde = app.add_subcommand("pde", "Solve the resetting/Neumann or the non-local boundary problem");
  pde->add_option("--problem", pa.problem, "neumann or nlbvp")->check(CLI::IsMember({"neumann", "nlbvp"}))->capture_default_str();
  pde->add_option("--r", pa.r, "Resetting rate")->capture_default_str();
  pde->add_option("--f", pa.f, "Initial datum: expneg, gauss, indicator:a,b")->capture_default_str();
  pde->add_option("--x-max", pa.x_max, "Domain length (default from r and t-max)");
  pde->add_option("--nx", pa.nx, "Spatial points (overrides --dx)");
  pde->add_option("--nt", pa.nt, "Time steps (overrides --dt)");
  pde->add_option("--t-max", pa.t_max, "Final time")->capture_default_str();
  pde->add_option("--dx", pa.dx, "Spatial step")->capture_default_str();
  pde->add_option("--dt", pa.dt, "Time step")->capture_default_str();
  pde->add_option("--t-stride", pa.t_stride, "Write every k-th time row")->capture_default_str();
  pde->add_option("--out", pa.out, "CSV with columns t,x,u");
  pde->callback([&] { action = [&] { return cmd_pde(pa); }; });

  TraceArgs ta;
  auto* tr = app.add_subcommand("trace", "Sample the boundary trace processes");
  tr->add_option("--which", ta.which, "t1, t2 or oracle")->check(CLI::IsMember({"t1", "t2", "oracle"}))->capture_default_str();
  tr->add_option("--r", ta.r, "Resetting rate")->capture_default_str();
  tr->add_option("--t", ta.t, "Trace time (local-time units)")->capture_default_str();
  tr->add_option("--paths", ta.paths, "Number of samples")->capture_default_str();
  tr->add_option("--seed", ta.seed, "Master seed")->capture_default_str();
  tr->add_option("--dt", ta.dt, "Time step")->capture_default_str();
  tr->add_option("--horizon", ta.horizon, "Initial search horizon (extended once by 4x)");
  tr->add_option("--out", ta.out, "CSV with columns which,t,value,stopping_time");
  tr->callback([&] { action = [&] { return cmd_trace(ta); }; });

  TraceVerifyArgs tva;
  auto* tv = app.add_subcommand("trace-verify", "Compare trace characteristic functions with their target");
  tv->add_option("--r", tva.r, "Resetting rate")->capture_default_str();
  tv->add_option("--t", tva.t, "Trace time")->capture_default_str();
  tv->add_option("--paths", tva.paths, "Samples per process")->capture_default_str();
  tv->add_option("--seed", tva.seed, "Master seed")->capture_default_str();
  tv->add_option("--dt", tva.dt, "Time step")->capture_default_str();
  tv->add_option("--xi", tva.xi, "Frequencies")->delimiter(',')->capture_default_str();
  tv->add_flag("--oracle", tva.oracle, "Also test T1 against the truncated Levy oracle");
  tv->add_option("--alpha", tva.alpha, "KS significance level")->capture_default_str();
  tv->add_option("--report", tva.report, "JSON-lines report file");
  tv->add_option("--format", tva.format, "Console format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  tv->callback([&] { action = [&] { return cmd_trace_verify(tva); }; });

  AnalyticArgs aa;
  auto* an = app.add_subcommand("analytic", "Closed-form formulas: residual checks and value tables");
  an->add_flag("--check", aa.check, "Print the identity residual table");
  an->add_option("--table", aa.table, "phi, psi, dn_symbol, stationary_density, pi_phi, pi_psi, ...");
  an->add_option("--r", aa.r, "Resetting rate")->capture_default_str();
  an->add_option("--lo", aa.lo, "Grid start")->capture_default_str();
  an->add_option("--hi", aa.hi, "Grid end")->capture_default_str();
  an->add_option("--n", aa.n, "Grid points")->capture_default_str();
  an->add_flag("--log", aa.log, "Geometric grid");
  an->add_option("--out", aa.out, "CSV with columns grid,value (stdout when absent)");
  an->add_option("--format", aa.format, "Console format for --check")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  an->callback([&] { action = [&] { return cmd_analytic(aa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsageError;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  argv.reserve(storage.size());
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rlab::cli
