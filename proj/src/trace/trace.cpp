#include "rlab/trace/trace.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "rlab/analytic/exponents.hpp"
#include "rlab/analytic/quadrature.hpp"
#include "rlab/analytic/resolvent.hpp"
#include "rlab/core/parallel.hpp"
#include "rlab/core/rng.hpp"
#include "rlab/reversal/x_tilde.hpp"
#include "rlab/simulate/engine.hpp"

namespace rlab {

std::vector<double> TraceSet::values() const {
  std::vector<double> v(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) v[i] = samples[i].value;
  return v;
}

namespace {

struct Crossing {
  explicit Crossing(double t) : target(t) {}
  double target;
  double prev_t = 0.0;
  double gamma = 0.0;
  std::optional<double> hit;
  bool on_point(double t, double, double push) {
    if (push > 0.0 && gamma + push >= target) {
      hit = prev_t + (t - prev_t) * (target - gamma) / push;
      return false;
    }
    gamma += push;
    prev_t = t;
    return true;
  }
  void on_reset(double, double) {}
};

}  // namespace

TraceSet sample_trace(TraceKind which, const ModelParams& p, std::uint64_t seed, std::size_t n, double t_trace) {
  require_valid(p, true);
  if (!(t_trace > 0.0)) throw std::invalid_argument("t_trace must be > 0");
  ModelParams q = p;
  q.x0 = 0.0;
  const auto steps = step_count(4.0 * p.horizon, p.dt);
  std::vector<std::optional<double>> stop(n);
  parallel_for(n, [&](std::size_t i) {
    const RngStreamSpec rng{seed, i};
    if (which == TraceKind::T1) {
      PathEngine engine(ProcessKind::of(ProcessTag::ReflectedResetting, p.r), q, rng);
      Crossing obs(t_trace);
      engine.run(obs, steps);
      stop[i] = obs.hit;
    } else {
      XTildeComposer comp(p.r, rng);
      Crossing obs(comp.subordinator().value(t_trace));
      PathEngine engine(ProcessKind::of(ProcessTag::DriftedReflected, p.r), q, rng);
      engine.run(obs, steps);
      stop[i] = obs.hit;
    }
  });
  TraceSet out;
  out.requested = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!stop[i]) {
      ++out.censored;
      continue;
    }
    const double z = RandomStream({seed, i}, Purpose::Horizontal).normals(0)[0];
    out.samples.push_back({t_trace, std::sqrt(2.0 * *stop[i]) * z, which});
    out.stopping_times.push_back(*stop[i]);
  }
  return out;
}

double trace_cf_target(double xi, double t_trace, double r) { return std::exp(t_trace * dn_symbol(xi, r)); }

ComplexEstimate trace_cf_estimate(const TraceSet& set, double xi) {
  std::vector<double> v = set.values();
  std::vector<double> re(set.requested, 0.0);
  std::vector<double> im(set.requested, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    re[i] = std::cos(xi * v[i]);
    im[i] = std::sin(xi * v[i]);
  }
  const auto mr = sample_mean(re);
  const auto mi = sample_mean(im);
  return {{mr.mean, mi.mean}, mr.std_error, mi.std_error};
}

double pi_phi_tail_inverse(double c, double r) {
  if (!(c > 0.0)) throw std::invalid_argument("tail level must be > 0");
  // G(s) = -r e^s - (ln pi + s)/2 - ln c, decreasing and concave in s = ln z.
  // Starting from the r = 0 root, Newton iterates decrease monotonically.
  const double lc = std::log(c);
  double s = -2.0 * lc - std::log(std::numbers::pi);
  for (int it = 0; it < 100; ++it) {
    const double es = std::exp(s);
    const double g = -r * es - 0.5 * (std::log(std::numbers::pi) + s) - lc;
    const double dg = -r * es - 0.5;
    const double step = g / dg;
    s -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(s))) break;
  }
  return std::exp(s);
}

std::vector<double> truncated_subordinator_samples(double r, double t, std::uint64_t seed, std::size_t n,
                                                   OracleOptions opt) {
  if (!(opt.eps_cut > 0.0)) throw std::invalid_argument("eps_cut must be > 0");
  if (opt.eps_cut > 1e-2) throw std::invalid_argument("eps_cut too large: small-jump mass not negligible");
  if (!(r >= 0.0)) throw std::invalid_argument("r must be ≥ 0");
  const LevyMeasure pi{LevyKind::PiPhi, r};
  const double eps = opt.eps_cut;
  const double small_mean =
      integrate_sqrt_singular([&](double z) { return z > 0.0 ? z * pi.density(z) : 0.0; }, 0.0, eps,
                              {1e-14, 2000});
  const double tail_eps = pi.tail(eps);
  const double rate = t * tail_eps;
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) {
    SequentialDraws rng({seed, i}, Purpose::Oracle);
    double h = t * small_mean;
    // Poisson count by summing exponential interarrivals over [0, rate].
    double clock = rng.exponential(1.0);
    while (clock < rate) {
      h += pi_phi_tail_inverse(tail_eps * rng.uniform(), r);
      clock += rng.exponential(1.0);
    }
    out[i] = h;
  });
  return out;
}

std::vector<double> truncated_levy_trace_oracle(double r, double t_trace, std::uint64_t seed, std::size_t n,
                                                OracleOptions opt) {
  auto h = truncated_subordinator_samples(r, t_trace, seed, n, opt);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = RandomStream({seed, i}, Purpose::Horizontal).normals(1)[0];
    h[i] = std::sqrt(2.0 * h[i]) * z;
  }
  return h;
}

}  // namespace rlab
