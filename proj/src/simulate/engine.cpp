#include "rlab/simulate/engine.hpp"

#include <stdexcept>
#include <string>

namespace rlab {

ProcessKind ProcessKind::of(ProcessTag tag, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be ≥ 0");
  return {tag, tag == ProcessTag::DriftedReflected && r > 0.0 ? -2.0 * std::sqrt(r) : 0.0};
}

const char* to_string(ProcessTag tag) {
  switch (tag) {
    case ProcessTag::FreeBM:
      return "FreeBM";
    case ProcessTag::ReflectedBM:
      return "ReflectedBM";
    case ProcessTag::FreeResetting:
      return "FreeResetting";
    case ProcessTag::ReflectedResetting:
      return "ReflectedResetting";
    case ProcessTag::DriftedReflected:
      return "DriftedReflected";
  }
  return "?";
}

bool parse_process_tag(const std::string& s, ProcessTag& out) {
  for (auto tag : {ProcessTag::FreeBM, ProcessTag::ReflectedBM, ProcessTag::FreeResetting,
                   ProcessTag::ReflectedResetting, ProcessTag::DriftedReflected}) {
    if (s == to_string(tag)) {
      out = tag;
      return true;
    }
  }
  if (s == "bm") out = ProcessTag::FreeBM;
  else if (s == "bm+") out = ProcessTag::ReflectedBM;
  else if (s == "x") out = ProcessTag::FreeResetting;
  else if (s == "x+") out = ProcessTag::ReflectedResetting;
  else if (s == "btilde") out = ProcessTag::DriftedReflected;
  else return false;
  return true;
}

std::uint64_t step_count(double horizon, double dt) {
  return static_cast<std::uint64_t>(std::ceil(horizon / dt - 1e-9));
}

PathEngine::PathEngine(ProcessKind kind, const ModelParams& p, RngStreamSpec rng, ReflectionScheme scheme)
    : dt_(p.dt),
      drift_(kind.drift),
      r_(kind.resetting() ? p.r : 0.0),
      x_r_(p.x_r),
      reflected_(kind.reflected()),
      scheme_(scheme),
      increments_(rng, Purpose::Increment),
      splits_(rng, Purpose::SplitIncrement),
      bridge_(rng, Purpose::Bridge),
      resets_(rng, Purpose::Reset),
      x_(p.x0) {
  require_valid(p, kind.reflected());
  next_reset_ = draw_interarrival();
}

void PathEngine::skip_to_last_reset(std::uint64_t n_steps) {
  const double t_final = static_cast<double>(n_steps) * dt_;
  if (next_reset_ > t_final) return;
  // Smallest k with tau <= (k+1) dt, evaluated exactly as run() does.
  const auto step_of = [this](double tau) {
    auto k = static_cast<std::uint64_t>(tau / dt_);
    while (k > 0 && tau <= static_cast<double>(k) * dt_) --k;
    while (tau > static_cast<double>(k + 1) * dt_) ++k;
    return k;
  };
  double last = next_reset_;
  std::uint64_t k_last = step_of(last);
  std::uint32_t sub_last = 0;
  double next = last + draw_interarrival();
  while (next <= t_final) {
    const std::uint64_t k = step_of(next);
    sub_last = k == k_last ? sub_last + 1 : 0;
    k_last = k;
    last = next;
    next = last + draw_interarrival();
  }
  t_ = last;
  x_ = x_r_;
  next_reset_ = next;
  if (last >= static_cast<double>(k_last + 1) * dt_) {
    k_ = k_last + 1;
    sub_ = 0;
  } else {
    k_ = k_last;
    sub_ = sub_last + 1;
  }
}

}  // namespace rlab
