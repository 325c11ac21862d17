#include "rlab/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace rlab {

VerificationReport closeness_report(std::string name, double statistic, double target, double tolerance) {
  VerificationReport rep;
  rep.name = std::move(name);
  rep.statistic = statistic;
  rep.target = target;
  rep.tolerance = tolerance;
  rep.passed = std::abs(statistic - target) <= tolerance;
  return rep;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("empirical distribution needs n >= 1");
  for (double v : sorted_) {
    if (!std::isfinite(v)) throw std::invalid_argument("empirical distribution samples must be finite");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::mean() const {
  return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(sorted_.size());
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double alpha) {
  double lo = 0.2;
  double hi = 5.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_survival(mid) > alpha) lo = mid;
    else hi = mid;
  }
  return hi;
}

namespace {

VerificationReport ks_report(std::string name, double d, double n_eff, double alpha, std::size_t n) {
  const double s = std::sqrt(n_eff);
  const double scale = s + 0.12 + 0.11 / s;
  VerificationReport rep;
  rep.name = std::move(name);
  rep.statistic = d;
  rep.target = 0.0;
  rep.tolerance = kolmogorov_critical(alpha) / scale;
  rep.p_value = kolmogorov_survival(scale * d);
  rep.passed = rep.p_value >= alpha;
  rep.n = n;
  std::ostringstream os;
  os << "alpha=" << alpha;
  rep.details = os.str();
  return rep;
}

}  // namespace

VerificationReport ks_test(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf, double alpha,
                           std::string name) {
  const std::size_t n = emp.n();
  if (n < 100) throw std::invalid_argument("ks_test needs n >= 100");
  const auto& x = emp.sorted();
  const double nn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / nn - f, f - static_cast<double>(i) / nn});
  }
  return ks_report(std::move(name), d, nn, alpha, n);
}

VerificationReport ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b, double alpha,
                                 std::string name) {
  const auto& x = a.sorted();
  const auto& y = b.sorted();
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return ks_report(std::move(name), d, n * m / (n + m), alpha, x.size() + y.size());
}

MeanEstimate sample_mean(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sample_mean of empty sample");
  const double n = static_cast<double>(values.size());
  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  double k = 0.0;
  for (double v : values) {
    k += 1.0;
    const double d = v - mean;
    mean += d / k;
    m2 += d * (v - mean);
  }
  const double var = values.size() > 1 ? m2 / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

MeanEstimate empirical_laplace(const std::vector<double>& samples, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  std::vector<double> v(samples.size());
  std::transform(samples.begin(), samples.end(), v.begin(), [&](double s) { return std::exp(-lambda * s); });
  return sample_mean(v);
}

ComplexEstimate empirical_char(const std::vector<double>& samples, double xi) {
  std::vector<double> re(samples.size());
  std::vector<double> im(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    re[i] = std::cos(xi * samples[i]);
    im[i] = std::sin(xi * samples[i]);
  }
  const auto mr = sample_mean(re);
  const auto mi = sample_mean(im);
  return {{mr.mean, mi.mean}, mr.std_error, mi.std_error};
}

VerificationReport sigma_report(std::string name, const MeanEstimate& est, double target, double k) {
  auto rep = closeness_report(std::move(name), est.mean, target, k * est.std_error);
  std::ostringstream os;
  os << "std_error=" << est.std_error << " k=" << k;
  rep.details = os.str();
  return rep;
}

VerificationReport chi_square_test(const std::vector<std::size_t>& counts, std::size_t overflow,
                                   const std::vector<double>& probs, double alpha, std::string name) {
  if (counts.size() != probs.size()) throw std::invalid_argument("counts and probs differ in length");
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}) + overflow);
  std::vector<double> obs;
  std::vector<double> exp;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    o += static_cast<double>(counts[i]);
    e += n * probs[i];
    if (e >= 5.0) {
      obs.push_back(o);
      exp.push_back(e);
      o = e = 0.0;
    }
  }
  const double p_rest = 1.0 - std::accumulate(probs.begin(), probs.end(), 0.0);
  o += static_cast<double>(overflow);
  e += n * std::max(0.0, p_rest);
  if (e >= 5.0 || exp.empty()) {
    obs.push_back(o);
    exp.push_back(e);
  } else {
    obs.back() += o;
    exp.back() += e;
  }
  if (obs.size() < 2) throw std::invalid_argument("chi_square_test needs at least two cells after merging");
  double stat = 0.0;
  for (std::size_t i = 0; i < obs.size(); ++i) stat += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
  const double dof = static_cast<double>(obs.size() - 1);
  boost::math::chi_squared dist(dof);
  VerificationReport rep;
  rep.name = std::move(name);
  rep.statistic = stat;
  rep.target = dof;
  rep.tolerance = boost::math::quantile(boost::math::complement(dist, alpha));
  rep.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  rep.passed = rep.p_value >= alpha;
  rep.n = static_cast<std::size_t>(n);
  std::ostringstream os;
  os << "cells=" << obs.size() << " alpha=" << alpha;
  rep.details = os.str();
  return rep;
}

}  // namespace rlab
