#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/analytic/exponents.hpp"
#include "rlab/analytic/kernels.hpp"
#include "rlab/core/parallel.hpp"
#include "rlab/reversal/subordinator.hpp"
#include "rlab/reversal/x_tilde.hpp"
#include "rlab/simulate/samplers.hpp"
#include "rlab/stats/tests.hpp"

using namespace rlab;

namespace {

auto exp_cdf(double rate) {
  return [rate](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-rate * x); };
}

// Drift 1, one jump of size 2 at operational time 1.
SubordinatorPath one_jump() { return SubordinatorPath(1.0, {1.0}, {2.0}, 3.0); }

}  // namespace

TEST(SubordinatorPath, ValueIsRightContinuous) {
  const auto h = one_jump();
  EXPECT_DOUBLE_EQ(h.value(0.5), 0.5);
  EXPECT_DOUBLE_EQ(h.value(1.0), 3.0);
  EXPECT_DOUBLE_EQ(h.value(2.0), 4.0);
  EXPECT_DOUBLE_EQ(h.covered(), 5.0);
  EXPECT_THROW(h.value(3.5), std::out_of_range);
}

TEST(SubordinatorPath, InverseIsFlatAcrossTheJump) {
  const auto h = one_jump();
  EXPECT_DOUBLE_EQ(h.inverse(0.5), 0.5);
  EXPECT_DOUBLE_EQ(h.inverse(1.0), 1.0);
  EXPECT_DOUBLE_EQ(h.inverse(2.0), 1.0);
  EXPECT_DOUBLE_EQ(h.inverse(2.999), 1.0);
  EXPECT_DOUBLE_EQ(h.inverse(3.0), 1.0);
  EXPECT_DOUBLE_EQ(h.inverse(4.0), 2.0);
  EXPECT_THROW(h.inverse(5.0), std::out_of_range);
}

TEST(SubordinatorPath, RemainingLifetime) {
  const auto h = one_jump();
  EXPECT_DOUBLE_EQ(h.remaining_lifetime(0.5), 0.0);
  // At the left limit of the jump the full size remains.
  EXPECT_DOUBLE_EQ(h.remaining_lifetime(1.0), 2.0);
  EXPECT_DOUBLE_EQ(h.remaining_lifetime(2.5), 0.5);
  EXPECT_DOUBLE_EQ(h.remaining_lifetime(3.0), 0.0);
  EXPECT_DOUBLE_EQ(h.remaining_lifetime(4.2), 0.0);
}

TEST(SubordinatorPath, RejectsBadInput) {
  EXPECT_THROW(SubordinatorPath(0.0, {}, {}, 1.0), std::invalid_argument);
  EXPECT_THROW(SubordinatorPath(1.0, {0.5}, {-1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(SubordinatorPath(1.0, {0.5, 0.4}, {1.0, 1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(SubordinatorPath(1.0, {2.0}, {1.0}, 1.0), std::invalid_argument);
}

TEST(SubordinatorPath, InverseUndoesValue) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto h = sample_subordinator_psi(2.0, 5.0, {61, i});
    for (double u = 0.013; u < 5.0; u += 0.21) {
      const double v = h.value(u);
      if (v < h.covered()) {
        EXPECT_NEAR(h.inverse(v), u, 1e-12);
      }
      EXPECT_GE(h.value(h.inverse(std::min(u, h.covered() * 0.999))) + 1e-12, std::min(u, h.covered() * 0.999));
      const double t = std::min(v, h.covered() * 0.999);
      EXPECT_NEAR(h.remaining_lifetime(t), h.value(h.inverse(t)) - t, 1e-12);
    }
  }
}

TEST(PsiSubordinator, JumpCountAndSizes) {
  const double r = 4.0;
  std::vector<double> counts;
  std::vector<double> sizes;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto h = sample_subordinator_psi(r, 10.0, {62, i});
    counts.push_back(static_cast<double>(h.jump_times().size()));
    sizes.insert(sizes.end(), h.jump_sizes().begin(), h.jump_sizes().end());
  }
  const auto m = sample_mean(counts);
  EXPECT_NEAR(m.mean, 20.0, 3.0 * std::sqrt(20.0 / 2000.0));
  EXPECT_TRUE(ks_test(EmpiricalDistribution(sizes), exp_cdf(std::sqrt(r)), 0.01).passed);
}

TEST(PsiSubordinator, LaplaceTransform) {
  for (double r : {1.0, 4.0}) {
    std::vector<double> h1;
    for (std::uint64_t i = 0; i < 20000; ++i) h1.push_back(sample_subordinator_psi(r, 1.0, {63, i}).value(1.0));
    for (double lambda : {0.5, 2.0}) {
      const auto est = empirical_laplace(h1, lambda);
      EXPECT_NEAR(est.mean, std::exp(-psi(lambda, r)), 3.0 * est.std_error) << r << " " << lambda;
    }
  }
}

TEST(PsiSubordinator, ZeroRateIsPureDrift) {
  const auto h = sample_subordinator_psi(0.0, 4.0, {64, 0});
  EXPECT_TRUE(h.jump_times().empty());
  EXPECT_DOUBLE_EQ(h.value(3.0), 3.0);
  EXPECT_DOUBLE_EQ(h.inverse(2.5), 2.5);
}

TEST(PsiSubordinator, GrowthOrderDoesNotChangeJumps) {
  LazyPsiSubordinator a(3.0, {65, 2});
  a.cover_level(40.0);
  LazyPsiSubordinator b(3.0, {65, 2});
  b.cover_operational(1.0);
  b.cover_level(5.0);
  b.cover_operational(12.0);
  b.cover_level(40.0);
  ASSERT_EQ(a.jump_count(), b.jump_count());
  for (std::size_t i = 0; i < a.jump_count(); ++i) {
    EXPECT_EQ(a.jump_time(i), b.jump_time(i));
    EXPECT_EQ(a.jump_size(i), b.jump_size(i));
  }
  const auto s = a.snapshot(5.0);
  EXPECT_EQ(s.value(5.0), b.value(5.0));
}

// int_0^inf e^{-l t} 1{L(t) <= x} dt has mean (1 - e^{-x Psi(l)})/l.
TEST(InverseSubordinator, TimeTransformOfOccupation) {
  const double r = 1.0;
  const double x = 0.5;
  const double lambda = 2.0;
  const double h = 1e-3;
  std::vector<double> vals(2000);
  for (std::uint64_t i = 0; i < vals.size(); ++i) {
    const auto path = sample_subordinator_psi(r, x + 1.0, {66, i});
    double acc = 0.0;
    for (double t = 0.5 * h; t < path.covered(); t += h) {
      if (path.inverse(t) <= x) acc += std::exp(-lambda * t) * h;
    }
    EXPECT_NEAR(acc, -std::expm1(-lambda * path.value(x)) / lambda, h);
    vals[i] = acc;
  }
  const auto m = sample_mean(vals);
  EXPECT_NEAR(m.mean, -std::expm1(-x * psi(lambda, r)) / lambda, 3.0 * m.std_error + h);
}

TEST(XTilde, ZeroRateIsReflectedBM) {
  const ModelParams p{0.0, 0.5, 0.0, 1.0, 1e-3};
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto x = build_x_tilde(p, {67, i});
    const auto b = simulate(ProcessKind::of(ProcessTag::ReflectedBM, 0.0), p, {67, i});
    EXPECT_EQ(x.path.values, b.path.values);
    EXPECT_EQ(x.gamma_tilde, b.local_time);
    EXPECT_TRUE(x.path.events.boundary_jumps.empty());
  }
}

TEST(XTilde, PathwiseStructure) {
  const double r = 2.0;
  const ModelParams p{r, 0.0, 0.0, 3.0, 1e-3};
  const double band = 10.0 * std::sqrt(2.0 * p.dt);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto x = build_x_tilde(p, {68, i});
    const auto b = simulate(ProcessKind::of(ProcessTag::DriftedReflected, r), p, {68, i});
    ASSERT_EQ(x.path.values.size(), b.path.values.size());
    EXPECT_EQ(x.gamma_tilde, b.local_time);
    const auto& xv = x.path.values;
    for (std::size_t k = 0; k < xv.size(); ++k) {
      ASSERT_GE(xv[k], 0.0);
      const double lift = xv[k] - b.path.values[k];
      ASSERT_GE(lift, -1e-12);
      if (k > 0 && x.regulator_increments[k] == 0.0) {
        // No boundary activity: X~ moves exactly with B~.
        ASSERT_NEAR(lift, xv[k - 1] - b.path.values[k - 1], 1e-12) << k;
      }
      if (k > 0) {
        ASSERT_GE(x.composed_local_time[k], x.composed_local_time[k - 1]);
        if (x.composed_local_time[k] > x.composed_local_time[k - 1]) {
          ASSERT_GT(x.regulator_increments[k], 0.0);
          ASSERT_LE(x.composed_local_time[k] - x.composed_local_time[k - 1], x.regulator_increments[k] + 1e-12);
        }
      }
    }
    for (const auto& j : x.path.events.boundary_jumps) {
      const auto it = std::lower_bound(x.path.times.begin(), x.path.times.end(), j.time);
      ASSERT_NE(it, x.path.times.end());
      const auto k = static_cast<std::size_t>(it - x.path.times.begin());
      ASSERT_GT(k, 0u);
      EXPECT_LE(xv[k - 1], kTolX + band);
      EXPECT_GT(j.size, 0.0);
    }
    EXPECT_TRUE(check_invariants(x.path, p, true).empty());
  }
}

TEST(XTilde, JumpSizesAndHoldingLocalTimes) {
  for (double r : {1.0, 4.0}) {
    const ModelParams p{r, 0.0, 0.0, 1.0, 1e-3};
    const auto s = boundary_jump_samples(p, 69, 5000);
    ASSERT_GE(s.sizes.size(), 5000u);
    EXPECT_TRUE(ks_test(EmpiricalDistribution(s.sizes), exp_cdf(std::sqrt(r)), 0.01).passed) << r;
    EXPECT_TRUE(ks_test(EmpiricalDistribution(s.holding_local_times), exp_cdf(std::sqrt(r)), 0.01).passed) << r;
  }
}

TEST(XTilde, StationaryLawIsPreserved) {
  const ModelParams p{2.0, 0.0, 0.0, 1.0, 1e-3};
  const auto xs = x_tilde_terminal_samples(p, 70, 20000, true);
  const auto rep = ks_test(EmpiricalDistribution(xs), [](double y) { return stationary_cdf_halfline(y, 2.0); }, 0.01);
  EXPECT_TRUE(rep.passed) << rep.statistic;
  const auto pairs = x_tilde_start_end_pairs(p, 70, 50);
  for (std::size_t i = 0; i < pairs.size(); ++i) EXPECT_EQ(pairs[i].second, xs[i]);
}

TEST(XTilde, MarginalFunctionals) {
  const ModelParams p{1.0, 0.0, 0.0, 1.0, 1e-3};
  const auto a = x_tilde_marginal_check(p, 71, 20000, 1.0, [](double y) { return std::exp(-y); }, "expneg");
  EXPECT_TRUE(a.passed) << a.statistic;
  EXPECT_NEAR(a.target, 0.5, 1e-10);
  const auto b = x_tilde_marginal_check({4.0, 0.0, 0.0, 1.0, 1e-3}, 72, 20000, 0.5, [](double y) { return y; }, "mean");
  EXPECT_TRUE(b.passed) << b.statistic;
  EXPECT_NEAR(b.target, 0.5, 1e-10);
}

TEST(XTilde, ComposedInverseLocalTimeLaw) {
  const ModelParams p{1.0, 0.0, 0.0, 25.0, 1e-3};
  for (double lambda : {0.5, 3.0}) {
    const auto rep = composed_local_time_law_check(p, 73, 5000, 0.5, lambda);
    EXPECT_TRUE(rep.passed) << lambda << " " << rep.statistic << " vs " << rep.target;
    EXPECT_NEAR(rep.target, inverse_local_time_laplace(lambda, 0.5, 1.0), 1e-15);
  }
  const auto zero = composed_inverse_local_time_samples(p, 73, 50, 0.0);
  for (double v : zero.samples) EXPECT_EQ(v, 0.0);
}
