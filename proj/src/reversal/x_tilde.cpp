#include "rlab/reversal/x_tilde.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rlab/analytic/exponents.hpp"
#include "rlab/analytic/kernels.hpp"
#include "rlab/analytic/quadrature.hpp"
#include "rlab/core/parallel.hpp"
#include "rlab/stats/tests.hpp"

namespace rlab {

XTildeComposer::XTildeComposer(double r, RngStreamSpec rng) : sub_(r, rng) {}

XTildeComposer::Point XTildeComposer::advance(double t, double b, double push) {
  gamma_ += push;
  sub_.cover_level(gamma_);
  while (activated_ < sub_.jump_count() && sub_.level_before(activated_) <= gamma_) {
    jumps_.push_back({t, sub_.jump_size(activated_), sub_.jump_time(activated_)});
    ++activated_;
  }
  if (activated_ > 0) {
    const std::size_t j = activated_ - 1;
    const double upper = sub_.level_after(j);
    if (gamma_ < upper) return {b + (upper - gamma_), sub_.jump_time(j), true};
  }
  return {b, gamma_ - sub_.size_sum(activated_), false};
}

namespace {

ProcessKind drifted(double r) { return ProcessKind::of(ProcessTag::DriftedReflected, r); }

struct ReversedRecorder {
  ReversedPath* out;
  XTildeComposer* comp;
  bool on_point(double t, double b, double push) {
    const auto pt = comp->advance(t, b, push);
    out->path.times.push_back(t);
    out->path.values.push_back(pt.x);
    out->gamma_tilde.push_back(comp->gamma());
    out->regulator_increments.push_back(push);
    out->composed_local_time.push_back(pt.composed_local);
    return true;
  }
  void on_reset(double, double) {}
};

struct TerminalComposer {
  XTildeComposer* comp;
  double last;
  bool on_point(double t, double b, double push) {
    last = comp->advance(t, b, push).x;
    return true;
  }
  void on_reset(double, double) {}
};

double x_tilde_terminal(const ModelParams& p, RngStreamSpec rng) {
  PathEngine engine(drifted(p.r), p, rng);
  XTildeComposer comp(p.r, rng);
  TerminalComposer obs{&comp, p.x0};
  engine.run(obs, step_count(p.horizon, p.dt));
  return obs.last;
}

}  // namespace

ReversedPath build_x_tilde(const ModelParams& p, RngStreamSpec rng, ReflectionScheme scheme) {
  require_valid(p, true);
  PathEngine engine(drifted(p.r), p, rng, scheme);
  XTildeComposer comp(p.r, rng);
  ReversedPath out;
  out.path.times.push_back(0.0);
  out.path.values.push_back(p.x0);
  out.gamma_tilde.push_back(0.0);
  out.regulator_increments.push_back(0.0);
  out.composed_local_time.push_back(0.0);
  ReversedRecorder rec{&out, &comp};
  engine.run(rec, step_count(p.horizon, p.dt));
  out.path.events.boundary_jumps = comp.jumps();
  out.subordinator = comp.subordinator().snapshot(out.composed_local_time.back());
  return out;
}

std::vector<double> x_tilde_terminal_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                             bool from_stationary) {
  require_valid(p, true);
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    ModelParams q = p;
    if (from_stationary) q.x0 = stationary_start(p.r, rng);
    out[i] = x_tilde_terminal(q, rng);
  });
  return out;
}

std::vector<std::pair<double, double>> x_tilde_start_end_pairs(const ModelParams& p, std::uint64_t seed,
                                                               std::size_t n) {
  require_valid(p, true);
  std::vector<std::pair<double, double>> out(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    ModelParams q = p;
    q.x0 = stationary_start(p.r, rng);
    out[i] = {q.x0, x_tilde_terminal(q, rng)};
  });
  return out;
}

VerificationReport x_tilde_marginal_check(const ModelParams& p, std::uint64_t seed, std::size_t n, double t,
                                          const std::function<double(double)>& f, std::string name) {
  ModelParams q = p;
  q.horizon = t;
  const auto xs = x_tilde_terminal_samples(q, seed, n, true);
  std::vector<double> fx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
  const double target = integrate_to_infinity([&](double y) { return f(y) * stationary_density_halfline(y, p.r); }, 0.0);
  auto rep = sigma_report(std::move(name), sample_mean(fx), target);
  rep.n = n;
  rep.seed = seed;
  rep.dt = p.dt;
  return rep;
}

namespace {

struct ComposedCrossing {
  explicit ComposedCrossing(double target) : target_gamma(target) {}
  double target_gamma;
  double prev_t = 0.0;
  double gamma = 0.0;
  std::optional<double> hit;
  bool on_point(double t, double, double push) {
    if (push > 0.0 && gamma + push >= target_gamma) {
      hit = prev_t + (t - prev_t) * (target_gamma - gamma) / push;
      return false;
    }
    gamma += push;
    prev_t = t;
    return true;
  }
  void on_reset(double, double) {}
};

}  // namespace

CensoredSamples composed_inverse_local_time_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                                    double level) {
  require_valid(p, true);
  if (!(level >= 0.0)) throw std::invalid_argument("level must be >= 0");
  std::vector<std::optional<double>> hits(n);
  const auto steps = step_count(4.0 * p.horizon, p.dt);
  parallel_for(n, [&](std::size_t i) {
    if (level == 0.0) {
      hits[i] = 0.0;
      return;
    }
    const RngStreamSpec rng{seed, i};
    XTildeComposer comp(p.r, rng);
    // L(g) >= level  <=>  g >= H(level).
    ComposedCrossing obs(comp.subordinator().value(level));
    PathEngine engine(drifted(p.r), p, rng);
    engine.run(obs, steps);
    hits[i] = obs.hit;
  });
  CensoredSamples out;
  out.requested = n;
  for (const auto& h : hits) {
    if (h) out.samples.push_back(*h);
    else ++out.censored;
  }
  return out;
}

VerificationReport composed_local_time_law_check(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                                 double level, double lambda) {
  const auto s = composed_inverse_local_time_samples(p, seed, n, level);
  // Censored paths have T > 4 horizon and contribute e^{-lambda T} ~ 0.
  std::vector<double> all = s.samples;
  all.resize(s.requested, std::numeric_limits<double>::infinity());
  std::ostringstream name;
  name << "composed_inverse_local_time level=" << level << " lambda=" << lambda;
  auto rep = sigma_report(name.str(), empirical_laplace(all, lambda), inverse_local_time_laplace(lambda, level, p.r));
  rep.n = n;
  rep.seed = seed;
  rep.dt = p.dt;
  rep.details += " censored=" + std::to_string(s.censored);
  return rep;
}

namespace {

struct JumpCollector {
  XTildeComposer* comp;
  std::size_t target;
  bool on_point(double t, double b, double push) {
    comp->advance(t, b, push);
    return comp->jumps().size() < target;
  }
  void on_reset(double, double) {}
};

}  // namespace

BoundaryJumpSamples boundary_jump_samples(const ModelParams& p, std::uint64_t seed, std::size_t n,
                                          std::size_t per_path) {
  require_valid(p, true);
  if (!(p.r > 0.0)) throw std::invalid_argument("boundary jumps need r > 0");
  if (per_path == 0) throw std::invalid_argument("per_path must be >= 1");
  const std::size_t n_paths = (n + per_path - 1) / per_path;
  std::vector<BoundaryJumpSamples> parts(n_paths);
  ModelParams q = p;
  q.x0 = 0.0;
  parallel_for(n_paths, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    XTildeComposer comp(p.r, rng);
    JumpCollector obs{&comp, per_path + 1};
    PathEngine engine(drifted(p.r), q, rng);
    engine.run(obs, std::numeric_limits<std::uint64_t>::max());
    const auto& jumps = comp.jumps();
    for (std::size_t k = 0; k < per_path; ++k) {
      parts[i].sizes.push_back(jumps[k].size);
      parts[i].holding_local_times.push_back(jumps[k + 1].local_time - jumps[k].local_time);
    }
  });
  BoundaryJumpSamples out;
  for (auto& part : parts) {
    out.sizes.insert(out.sizes.end(), part.sizes.begin(), part.sizes.end());
    out.holding_local_times.insert(out.holding_local_times.end(), part.holding_local_times.begin(),
                                   part.holding_local_times.end());
  }
  out.sizes.resize(n);
  out.holding_local_times.resize(n);
  return out;
}

}  // namespace rlab
