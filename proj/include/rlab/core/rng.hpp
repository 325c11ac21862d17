#pragma once

// Counter-based random streams.
//
// Every draw is addressed by (master_seed, stream_index, purpose, position,
// sub) and computed with Philox4x32-10, so any draw can be regenerated
// without replaying the ones before it. Simulations key Brownian increments
// by grid step; this lets a path be restarted mid-way and still reproduce
// the full-simulation values bit for bit.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace rlab {

struct RngStreamSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

// Disjoint sub-streams of one RngStreamSpec.
enum class Purpose : std::uint32_t {
  Increment = 0,
  SplitIncrement = 1,
  Bridge = 2,
  Reset = 3,
  Subordinator = 4,
  Horizontal = 5,
  Initial = 6,
  Oracle = 7,
  Auxiliary = 8,
};

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxBlock philox4x32_10(PhiloxBlock ctr, PhiloxKey key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

// 52-bit uniform strictly inside (0, 1); with 53 bits the top value
// rounds to 1.
inline double to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

inline std::uint64_t join_words(std::uint32_t lo, std::uint32_t hi) {
  return (std::uint64_t{hi} << 32) | lo;
}

// Standard normal quantile, Wichura's AS241 (PPND16); relative error
// about 1e-16 on (0, 1).
inline double normal_quantile(double p) {
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2509.0809287301226727 * r + 33430.575583588128105) * r + 67265.770927008700853) * r +
                45921.953931549871457) * r + 13731.693765509461125) * r + 1971.5909503065514427) * r +
             133.14166789178437745) * r + 3.387132872796366608) /
           (((((((5226.495278852545925 * r + 28729.085735721942674) * r + 39307.89580009271061) * r +
                21213.794301586595867) * r + 5394.1960214247511077) * r + 687.1870074920579083) * r +
             42.313330701600911252) * r + 1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    r -= 1.6;
    v = (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r + 0.24178072517745061177) * r +
             1.27045825245236838258) * r + 3.64784832476320460504) * r + 5.7694972214606914055) * r +
          4.6303378461565452959) * r + 1.42343711074968357734) /
        (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r + 0.0151986665636164571966) * r +
             0.14810397642748007459) * r + 0.68976733498510000455) * r + 1.6763848301838038494) * r +
          2.05319162663775882187) * r + 1.0);
  } else {
    r -= 5.0;
    v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r + 0.0012426609473880784386) * r +
             0.026532189526576123093) * r + 0.29656057182850489123) * r + 1.7848265399172913358) * r +
          5.4637849111641143699) * r + 6.6579046435011037772) /
        (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r + 1.8463183175100546818e-5) * r +
             7.868691311456132591e-4) * r + 0.0148753612908506148525) * r + 0.13692988092273580531) * r +
          0.59983220655588793769) * r + 1.0);
  }
  return q < 0.0 ? -v : v;
}

// Random-access view of one purpose-specific stream.
class RandomStream {
 public:
  RandomStream(RngStreamSpec spec, Purpose purpose)
      : key_{static_cast<std::uint32_t>(spec.master_seed),
             static_cast<std::uint32_t>(spec.master_seed >> 32)},
        index_lo_(static_cast<std::uint32_t>(spec.stream_index)),
        index_hi_(static_cast<std::uint32_t>(spec.stream_index >> 32) & 0xFFFFu),
        purpose_(static_cast<std::uint32_t>(purpose) << 24) {}

  // position < 2^56, sub < 2^16.
  PhiloxBlock block(std::uint64_t position, std::uint32_t sub = 0) const {
    const PhiloxBlock ctr{static_cast<std::uint32_t>(position),
                          (static_cast<std::uint32_t>(position >> 32) & 0xFFFFFFu) | purpose_,
                          index_lo_, index_hi_ | (sub << 16)};
    return philox4x32_10(ctr, key_);
  }

  std::array<double, 2> uniforms(std::uint64_t position, std::uint32_t sub = 0) const {
    const auto b = block(position, sub);
    return {to_open_unit(join_words(b[0], b[1])), to_open_unit(join_words(b[2], b[3]))};
  }

  // Two independent standard normals by inversion.
  std::array<double, 2> normals(std::uint64_t position, std::uint32_t sub = 0) const {
    const auto u = uniforms(position, sub);
    return {normal_quantile(u[0]), normal_quantile(u[1])};
  }

 private:
  PhiloxKey key_;
  std::uint32_t index_lo_;
  std::uint32_t index_hi_;
  std::uint32_t purpose_;
};

// Sequential consumer of a RandomStream. Also a UniformRandomBitGenerator so
// that Boost distributions can draw from it.
class SequentialDraws {
 public:
  using result_type = std::uint64_t;

  SequentialDraws(RngStreamSpec spec, Purpose purpose) : stream_(spec, purpose) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (word_ == 2) refill();
    return words_[word_++];
  }

  double uniform() { return to_open_unit((*this)()); }

  double normal() { return normal_quantile(uniform()); }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  std::uint64_t position() const { return position_; }

 private:
  void refill() {
    const auto b = stream_.block(position_++);
    words_ = {join_words(b[0], b[1]), join_words(b[2], b[3])};
    word_ = 0;
  }

  RandomStream stream_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 2> words_{};
  int word_ = 2;
};

// Default source for a stream spec: the auxiliary sequential stream.
SequentialDraws derive_stream(RngStreamSpec spec, Purpose purpose = Purpose::Auxiliary);

}  // namespace rlab
