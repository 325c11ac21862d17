#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "rlab/core/io.hpp"
#include "rlab/core/parallel.hpp"
#include "rlab/core/params.hpp"
#include "rlab/core/path.hpp"
#include "rlab/core/rng.hpp"
#include "rlab/simulate/samplers.hpp"

using namespace rlab;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST(Philox, KnownAnswerVectors) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (PhiloxBlock{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (PhiloxBlock{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (PhiloxBlock{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, OpenUnitStaysInside) {
  EXPECT_GT(to_open_unit(0), 0.0);
  EXPECT_LT(to_open_unit(~std::uint64_t{0}), 1.0);
  EXPECT_EQ(to_open_unit(std::uint64_t{1} << 63), 0.5 + 0x1.0p-53);
  EXPECT_EQ(to_open_unit(0), 0x1.0p-53);
}

TEST(NormalQuantile, MatchesBoostQuantile) {
  const boost::math::normal n;
  for (double p : {1e-300, 1e-100, 1e-20, 1e-8, 1e-3, 0.02, 0.0749, 0.0751, 0.3, 0.5, 0.7, 0.9, 0.999, 1.0 - 1e-12}) {
    const double want = boost::math::quantile(n, p);
    EXPECT_NEAR(normal_quantile(p), want, 1e-15 * std::max(1.0, std::abs(want))) << "p=" << p;
  }
}

TEST(NormalQuantile, IsOddAroundHalf) {
  for (double q : {0.01, 0.1, 0.3, 0.45}) {
    EXPECT_NEAR(normal_quantile(0.5 - q), -normal_quantile(0.5 + q), 4e-15 * std::abs(normal_quantile(0.5 + q)));
  }
}

TEST(Streams, SameSpecGivesIdenticalNormals) {
  auto a = derive_stream({1, 0});
  auto b = derive_stream({1, 0});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.normal(), b.normal());
}

TEST(Streams, DistinctIndexOrSeedDiffers) {
  auto a = derive_stream({1, 0});
  auto b = derive_stream({1, 1});
  auto c = derive_stream({2, 0});
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 10; ++i) {
    const double x = a.normal();
    same_ab += x == b.normal();
    same_ac += x == c.normal();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(Streams, PurposesAreDisjoint) {
  std::set<std::uint32_t> first_words;
  for (auto p : {Purpose::Increment, Purpose::SplitIncrement, Purpose::Bridge, Purpose::Reset, Purpose::Subordinator,
                 Purpose::Horizontal, Purpose::Initial, Purpose::Oracle, Purpose::Auxiliary}) {
    first_words.insert(RandomStream({7, 3}, p).block(0)[0]);
  }
  EXPECT_EQ(first_words.size(), 9u);
}

TEST(Streams, SequentialMatchesRandomAccess) {
  const RandomStream rs({9, 4}, Purpose::Reset);
  SequentialDraws seq({9, 4}, Purpose::Reset);
  for (std::uint64_t k = 0; k < 5; ++k) {
    const auto u = rs.uniforms(k);
    EXPECT_EQ(seq.uniform(), u[0]);
    EXPECT_EQ(seq.uniform(), u[1]);
  }
  EXPECT_EQ(seq.position(), 5u);
}

TEST(Streams, NormalsHaveUnitVariance) {
  const RandomStream rs({11, 0}, Purpose::Increment);
  const int n = 100000;
  double s = 0.0;
  double s2 = 0.0;
  for (int k = 0; k < n / 2; ++k) {
    for (double z : rs.normals(static_cast<std::uint64_t>(k))) {
      s += z;
      s2 += z * z;
    }
  }
  EXPECT_NEAR(s / n, 0.0, 3.0 / std::sqrt(n));
  EXPECT_NEAR(s2 / n, 1.0, 3.0 * std::sqrt(2.0 / n));
}

TEST(Params, ValidExampleHasNoErrors) {
  EXPECT_TRUE(validate_params({2.0, 0.0, 0.0, 10.0, 1e-3}).empty());
}

TEST(Params, NegativeRateReported) {
  EXPECT_TRUE(contains(validate_params({-1.0, 0.0, 0.0, 10.0, 1e-3}), "r must be ≥ 0"));
}

TEST(Params, ZeroStepReported) {
  EXPECT_TRUE(contains(validate_params({1.0, 0.0, 0.0, 10.0, 0.0}), "dt must be > 0"));
}

TEST(Params, EveryViolationIsListed) {
  const auto e = validate_params({-1.0, -0.5, 1.0, -2.0, 0.0});
  EXPECT_TRUE(contains(e, "r must be ≥ 0"));
  EXPECT_TRUE(contains(e, "dt must be > 0"));
  EXPECT_TRUE(contains(e, "horizon must be > 0"));
  EXPECT_TRUE(contains(e, "x0 must be ≥ 0 for half-line processes"));
  EXPECT_TRUE(contains(e, "x_r must be 0 for half-line processes"));
}

TEST(Params, StepMustBeBelowHorizon) {
  EXPECT_TRUE(contains(validate_params({1.0, 0.0, 0.0, 1.0, 1.0}), "dt must be < horizon"));
}

TEST(Params, FreeLineAllowsNegativeStart) {
  EXPECT_TRUE(validate_params({1.0, -3.0, 0.5, 1.0, 1e-3}, false).empty());
}

TEST(Params, RequireValidThrows) {
  EXPECT_THROW(require_valid({-1.0, 0.0, 0.0, 1.0, 1e-3}), std::invalid_argument);
  EXPECT_NO_THROW(require_valid({1.0, 0.0, 0.0, 1.0, 1e-3}));
}

TEST(Params, DefaultStep) {
  EXPECT_DOUBLE_EQ(default_dt(0.0), 1e-4);
  EXPECT_DOUBLE_EQ(default_dt(4.0), 1e-4);
  EXPECT_DOUBLE_EQ(default_dt(0.5), 2e-4);
}

TEST(PathInvariants, SimulatedPathsAreConsistent) {
  const ModelParams p{3.0, 0.2, 0.0, 2.0, 1e-3};
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto path = simulate(ProcessKind::of(ProcessTag::ReflectedResetting, p.r), p, {5, i});
    EXPECT_TRUE(check_invariants(path, p, true, 10.0 * std::sqrt(2.0 * p.dt)).empty());
  }
}

TEST(PathInvariants, CorruptionIsDetected) {
  const ModelParams p{1.0, 0.0, 0.0, 1.0, 0.25};
  SamplePath path;
  path.times = {0.0, 0.25, 0.25, 0.75};
  path.values = {0.0, -0.1, 0.3, 0.2};
  path.events.reset_times = {0.5};
  path.events.pre_reset_positions = {0.1};
  path.events.boundary_jumps = {{0.5, 0.0, 0.1}};
  const auto e = check_invariants(path, p, true);
  auto has = [&](const std::string& prefix) {
    return std::any_of(e.begin(), e.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
  };
  EXPECT_TRUE(has("times not strictly increasing"));
  EXPECT_TRUE(has("negative value"));
  EXPECT_TRUE(has("non-positive jump size"));
  EXPECT_TRUE(has("reset time missing from grid"));
}

TEST(PathInvariants, LocalTimeMustNotGrowAwayFromZero) {
  const ModelParams p{0.0, 1.0, 0.0, 1.0, 0.5};
  AugmentedPath a;
  a.path.times = {0.0, 0.5, 1.0};
  a.path.values = {1.0, 1.0, 1.0};
  a.local_time = {0.0, 0.1, 0.05};
  a.regulator_increments = {0.0, 0.1, 0.0};
  const auto e = check_invariants(a, p, true, 0.0);
  EXPECT_EQ(e.size(), 2u);
}

TEST(Io, PathCsvColumns) {
  SamplePath p;
  p.times = {0.0, 0.5};
  p.values = {1.0, 0.25};
  EXPECT_EQ(path_csv(p), "t,x\n0,1\n0.5,0.25\n");
  EXPECT_EQ(path_csv(p, {0.0, 0.125}), "t,x,gamma\n0,1,0\n0.5,0.25,0.125\n");
}

TEST(Io, EventLogRoundTrip) {
  EventLog e;
  e.reset_times = {0.1, 0.7};
  e.pre_reset_positions = {0.3, 1.2};
  e.boundary_jumps = {{0.4, 2.5, 0.05}};
  const auto j = to_json(e);
  EXPECT_TRUE(j.contains("reset_times"));
  EXPECT_TRUE(j.contains("pre_reset_positions"));
  EXPECT_TRUE(j.contains("boundary_jumps"));
  const auto back = event_log_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.reset_times, e.reset_times);
  EXPECT_EQ(back.pre_reset_positions, e.pre_reset_positions);
  ASSERT_EQ(back.boundary_jumps.size(), 1u);
  EXPECT_EQ(back.boundary_jumps[0].size, 2.5);
  EXPECT_EQ(back.boundary_jumps[0].local_time, 0.05);
}

TEST(Io, AtomicWriteLeavesOnlyTarget) {
  const auto dir = std::filesystem::temp_directory_path() / "rlab_io_test";
  std::filesystem::remove_all(dir);
  const auto target = dir / "sub" / "out.txt";
  atomic_write_file(target, "first");
  atomic_write_file(target, "second");
  EXPECT_EQ(slurp(target), "second");
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(target.parent_path())) files += e.is_regular_file();
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}

TEST(Parallel, ThreadCapFromEnvironment) {
  ::setenv("RESETTING_LAB_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  ::setenv("RESETTING_LAB_THREADS", "garbage", 1);
  EXPECT_GE(worker_count(), 1u);
  ::unsetenv("RESETTING_LAB_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

TEST(Parallel, EveryIndexVisitedOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST(Parallel, ExceptionsPropagate) {
  EXPECT_THROW(parallel_for(100, [](std::size_t i) {
                 if (i == 37) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
