#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rlab/stats/report.hpp"

namespace rlab {

class EmpiricalDistribution {
 public:
  // Throws if empty or any sample is not finite.
  explicit EmpiricalDistribution(std::vector<double> samples);

  std::size_t n() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }
  double cdf(double x) const;
  double mean() const;

 private:
  std::vector<double> sorted_;
};

// Asymptotic Kolmogorov survival function P(K > x).
double kolmogorov_survival(double x);
// Smallest x with kolmogorov_survival(x) <= alpha.
double kolmogorov_critical(double alpha);

// Two-sided one-sample KS with Stephens' finite-n correction
// (sqrt(n) + 0.12 + 0.11/sqrt(n)) D. Requires n >= 100.
VerificationReport ks_test(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf, double alpha,
                           std::string name = "ks");

// Effective size n m/(n+m) in place of n.
VerificationReport ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b, double alpha,
                                 std::string name = "ks2");

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct ComplexEstimate {
  std::complex<double> mean;
  double std_error_real = 0.0;
  double std_error_imag = 0.0;
};

MeanEstimate sample_mean(const std::vector<double>& values);
MeanEstimate empirical_laplace(const std::vector<double>& samples, double lambda);
ComplexEstimate empirical_char(const std::vector<double>& samples, double xi);

// |estimate - target| <= k * std_error.
VerificationReport sigma_report(std::string name, const MeanEstimate& est, double target, double k = 3.0);

// Pearson chi-square against cell probabilities (which must sum to <= 1;
// the remainder is an overflow cell). Adjacent cells are merged left to
// right until every expected count is >= 5.
VerificationReport chi_square_test(const std::vector<std::size_t>& counts, std::size_t overflow,
                                   const std::vector<double>& probs, double alpha, std::string name = "chi2");

}  // namespace rlab
