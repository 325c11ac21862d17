#include "rlab/simulate/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "rlab/core/parallel.hpp"

namespace rlab {

namespace {

struct Recorder {
  AugmentedPath* out;
  bool on_point(double t, double x, double push) {
    out->path.times.push_back(t);
    out->path.values.push_back(x);
    out->regulator_increments.push_back(push);
    out->local_time.push_back(out->local_time.back() + push);
    return true;
  }
  void on_reset(double t, double pre) {
    out->path.events.reset_times.push_back(t);
    out->path.events.pre_reset_positions.push_back(pre);
  }
};

struct Ignore {
  bool on_point(double, double, double) { return true; }
  void on_reset(double, double) {}
};

struct LevelCrossing {
  explicit LevelCrossing(double l) : level(l) {}
  double level;
  double prev_t = 0.0;
  double gamma = 0.0;
  std::optional<double> hit;
  bool on_point(double t, double, double push) {
    if (push > 0.0 && gamma + push >= level) {
      hit = prev_t + (t - prev_t) * (level - gamma) / push;
      return false;
    }
    gamma += push;
    prev_t = t;
    return true;
  }
  void on_reset(double, double) {}
};

struct ZeroHit {
  std::optional<double> hit;
  bool on_point(double t, double x, double push) {
    if (push > 0.0 || x <= kTolX) {
      hit = t;
      return false;
    }
    return true;
  }
  void on_reset(double t, double) {
    hit = t;
  }
};

}  // namespace

AugmentedPath simulate(ProcessKind kind, const ModelParams& p, RngStreamSpec rng, ReflectionScheme scheme) {
  PathEngine engine(kind, p, rng, scheme);
  const auto n = step_count(p.horizon, p.dt);
  AugmentedPath out;
  out.path.times.reserve(n + 1);
  out.path.values.reserve(n + 1);
  out.local_time.reserve(n + 1);
  out.regulator_increments.reserve(n + 1);
  out.path.times.push_back(0.0);
  out.path.values.push_back(p.x0);
  out.local_time.push_back(0.0);
  out.regulator_increments.push_back(0.0);
  Recorder rec{&out};
  engine.run(rec, n);
  return out;
}

double simulate_terminal(ProcessKind kind, const ModelParams& p, RngStreamSpec rng, ReflectionScheme scheme) {
  PathEngine engine(kind, p, rng, scheme);
  const auto n = step_count(p.horizon, p.dt);
  engine.skip_to_last_reset(n);
  Ignore ignore;
  engine.run(ignore, n);
  return engine.value();
}

double stationary_start(double r, RngStreamSpec rng) {
  if (!(r > 0.0)) throw std::invalid_argument("stationary start needs r > 0");
  return -std::log(RandomStream(rng, Purpose::Initial).uniforms(0)[0]) / std::sqrt(r);
}

std::vector<double> terminal_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                     bool from_stationary, ReflectionScheme scheme) {
  require_valid(p, kind.reflected());
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    ModelParams q = p;
    if (from_stationary) q.x0 = stationary_start(p.r, rng);
    out[i] = simulate_terminal(kind, q, rng, scheme);
  });
  return out;
}

std::vector<std::pair<double, double>> stationary_start_end_pairs(ProcessKind kind, const ModelParams& p,
                                                                  std::uint64_t seed, std::size_t n) {
  require_valid(p, kind.reflected());
  std::vector<std::pair<double, double>> out(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    ModelParams q = p;
    q.x0 = stationary_start(p.r, rng);
    out[i] = {q.x0, simulate_terminal(kind, q, rng)};
  });
  return out;
}

std::vector<double> local_time_occupation(const AugmentedPath& path, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  const auto& t = path.path.times;
  const auto& x = path.path.values;
  std::vector<double> out(t.size(), 0.0);
  double occ = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    // A reset point is the post-reset value; the left limit is unknown, so
    // a reset step counts only its right end.
    const double left = x[i - 1] < eps ? 1.0 : 0.0;
    const double right = x[i] < eps ? 1.0 : 0.0;
    occ += 0.5 * (left + right) * (t[i] - t[i - 1]);
    out[i] = occ / (2.0 * eps);
  }
  return out;
}

std::optional<double> first_hitting_time(const AugmentedPath& path) {
  const auto& x = path.path.values;
  if (!x.empty() && x[0] <= kTolX) return 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (path.regulator_increments[i] > 0.0 || x[i] <= kTolX) return path.path.times[i];
  }
  return std::nullopt;
}

CensoredSamples inverse_local_time_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                           double level, ReflectionScheme scheme) {
  if (!kind.reflected()) throw std::invalid_argument("inverse local time needs a reflected process");
  if (!(level >= 0.0)) throw std::invalid_argument("level must be >= 0");
  require_valid(p, true);
  std::vector<std::optional<double>> hits(n);
  const auto steps = step_count(4.0 * p.horizon, p.dt);
  parallel_for(n, [&](std::size_t i) {
    if (level == 0.0) {
      hits[i] = 0.0;
      return;
    }
    PathEngine engine(kind, p, {seed, i}, scheme);
    LevelCrossing obs(level);
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

CensoredSamples hitting_time_samples(ProcessKind kind, const ModelParams& p, std::uint64_t seed, std::size_t n,
                                     ReflectionScheme scheme) {
  require_valid(p, kind.reflected());
  std::vector<std::optional<double>> hits(n);
  const auto steps = step_count(p.horizon, p.dt);
  parallel_for(n, [&](std::size_t i) {
    if (p.x0 <= kTolX) {
      hits[i] = 0.0;
      return;
    }
    PathEngine engine(kind, p, {seed, i}, scheme);
    ZeroHit obs;
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

namespace {

struct ResetCollector {
  explicit ResetCollector(std::size_t n) : target(n) {}
  std::size_t target;
  double gamma = 0.0;
  double gamma_at_reset = 0.0;
  double last_reset = -1.0;
  bool pending = false;
  BetweenResets out;
  std::size_t resets = 0;
  // on_point follows on_reset and carries the push of the sub-step that
  // ends at the reset, which belongs to the segment before it.
  bool on_point(double, double, double push) {
    gamma += push;
    if (pending) {
      if (resets > 1) out.local_times.push_back(gamma - gamma_at_reset);
      gamma_at_reset = gamma;
      pending = false;
    }
    return resets < target;
  }
  void on_reset(double t, double pre) {
    ++resets;
    pending = true;
    out.pre_reset_positions.push_back(pre);
    if (last_reset >= 0.0) out.gaps.push_back(t - last_reset);
    last_reset = t;
  }
};

}  // namespace

BetweenResets between_reset_samples(const ModelParams& p, std::uint64_t seed, std::size_t n_resets,
                                    std::size_t per_path) {
  require_valid(p, true);
  if (!(p.r > 0.0)) throw std::invalid_argument("between-reset samples need r > 0");
  if (per_path == 0) throw std::invalid_argument("per_path must be >= 1");
  const std::size_t n_paths = (n_resets + per_path - 1) / per_path;
  std::vector<BetweenResets> parts(n_paths);
  ModelParams q = p;
  q.x0 = 0.0;
  parallel_for(n_paths, [&](std::size_t i) {
    PathEngine engine(ProcessKind::of(ProcessTag::ReflectedResetting, p.r), q, {seed, i});
    ResetCollector obs(per_path + 1);
    engine.run(obs, std::numeric_limits<std::uint64_t>::max());
    obs.out.pre_reset_positions.resize(per_path);
    parts[i] = std::move(obs.out);
  });
  BetweenResets out;
  for (auto& part : parts) {
    out.pre_reset_positions.insert(out.pre_reset_positions.end(), part.pre_reset_positions.begin(),
                                   part.pre_reset_positions.end());
    out.gaps.insert(out.gaps.end(), part.gaps.begin(), part.gaps.end());
    out.local_times.insert(out.local_times.end(), part.local_times.begin(), part.local_times.end());
  }
  out.pre_reset_positions.resize(n_resets);
  out.gaps.resize(std::min(out.gaps.size(), n_resets));
  out.local_times.resize(std::min(out.local_times.size(), n_resets));
  return out;
}

std::vector<std::size_t> reset_counts(const ModelParams& p, std::uint64_t seed, std::size_t n) {
  require_valid(p, true);
  std::vector<std::size_t> out(n);
  parallel_for(n, [&](std::size_t i) {
    if (p.r == 0.0) return;
    // Interarrivals are the engine's Reset stream, consumed in order.
    SequentialDraws draws({seed, i}, Purpose::Reset);
    double t = draws.exponential(p.r);
    while (t <= p.horizon) {
      ++out[i];
      t += draws.exponential(p.r);
    }
  });
  return out;
}

}  // namespace rlab
