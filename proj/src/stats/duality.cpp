#include "rlab/stats/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/random/binomial_distribution.hpp>

#include "rlab/core/rng.hpp"

namespace rlab {

std::vector<double> histogram2d(const PointPairs& pts, const Cellization& c) {
  const auto n = static_cast<std::size_t>(c.cells);
  std::vector<double> h(n * n + 1, 0.0);
  const double w = c.extent / c.cells;
  for (const auto& [x, y] : pts) {
    if (x < 0.0 || y < 0.0 || x >= c.extent || y >= c.extent) {
      h.back() += 1.0;
      continue;
    }
    const auto i = std::min(n - 1, static_cast<std::size_t>(x / w));
    const auto j = std::min(n - 1, static_cast<std::size_t>(y / w));
    h[i * n + j] += 1.0;
  }
  return h;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("histograms differ in layout");
  const double na = std::accumulate(a.begin(), a.end(), 0.0);
  const double nb = std::accumulate(b.begin(), b.end(), 0.0);
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] / na - b[i] / nb);
  return 0.5 * tv;
}

namespace {

std::vector<double> multinomial(std::size_t n, const std::vector<double>& p, SequentialDraws& rng) {
  std::vector<double> out(p.size(), 0.0);
  std::size_t left = n;
  double mass = 1.0;
  for (std::size_t i = 0; i + 1 < p.size() && left > 0; ++i) {
    const double q = mass > 0.0 ? std::clamp(p[i] / mass, 0.0, 1.0) : 0.0;
    boost::random::binomial_distribution<long long, double> bin(static_cast<long long>(left), q);
    const auto k = static_cast<std::size_t>(bin(rng));
    out[i] = static_cast<double>(k);
    left -= k;
    mass -= p[i];
  }
  out.back() += static_cast<double>(left);
  return out;
}

}  // namespace

VerificationReport tv_two_sample_test(const PointPairs& a, const PointPairs& b, const Cellization& c,
                                      std::uint64_t seed, std::string name) {
  if (a.empty() || b.empty()) throw std::invalid_argument("tv test needs non-empty samples");
  const auto ha = histogram2d(a, c);
  const auto hb = histogram2d(b, c);

  // Pool sparse cells into one bucket.
  std::vector<double> ca;
  std::vector<double> cb;
  double sparse_a = 0.0;
  double sparse_b = 0.0;
  for (std::size_t i = 0; i < ha.size(); ++i) {
    if (ha[i] + hb[i] < c.min_pooled) {
      sparse_a += ha[i];
      sparse_b += hb[i];
    } else {
      ca.push_back(ha[i]);
      cb.push_back(hb[i]);
    }
  }
  ca.push_back(sparse_a);
  cb.push_back(sparse_b);

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::vector<double> pooled(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) pooled[i] = (ca[i] + cb[i]) / (na + nb);

  const double tv = total_variation(ca, cb);
  SequentialDraws rng({seed, 0}, Purpose::Oracle);
  std::vector<double> null_tv(static_cast<std::size_t>(c.bootstrap));
  for (auto& v : null_tv) {
    v = total_variation(multinomial(a.size(), pooled, rng), multinomial(b.size(), pooled, rng));
  }
  std::sort(null_tv.begin(), null_tv.end());
  const auto qi = std::min(null_tv.size() - 1, static_cast<std::size_t>(std::ceil(c.quantile * null_tv.size())) - 1);
  const double threshold = null_tv[qi];
  std::size_t exceed = 0;
  for (double v : null_tv) exceed += v >= tv ? 1 : 0;

  VerificationReport rep;
  rep.name = std::move(name);
  rep.statistic = tv;
  rep.target = 0.0;
  rep.tolerance = threshold;
  rep.passed = tv <= threshold;
  rep.p_value = (1.0 + static_cast<double>(exceed)) / (1.0 + static_cast<double>(null_tv.size()));
  rep.n = a.size() + b.size();
  rep.seed = seed;
  std::ostringstream os;
  os << "cells=" << ca.size() << " bootstrap=" << c.bootstrap << " quantile=" << c.quantile;
  rep.details = os.str();
  return rep;
}

PointPairs transposed(const PointPairs& pts) {
  PointPairs out(pts.size());
  std::transform(pts.begin(), pts.end(), out.begin(), [](const auto& p) { return std::make_pair(p.second, p.first); });
  return out;
}

}  // namespace rlab
