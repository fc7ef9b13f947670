#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aspectsearch/quadrature.hpp"
#include "aspectsearch/simulate.hpp"
#include "testutil.hpp"

using namespace aspectsearch;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("a profile that never detects yields estimate 1 exactly") {
  const SimulationConfig config{DetectionProfile({1.0}),
                                AngleVector{0.0, 1.0, 2.0}, 5000, 9};
  const auto result = simulate(config);
  CHECK(result.estimate == 1.0);
  CHECK(result.std_error == 0.0);
  CHECK(result.trials == 5000);
  CHECK(result.seed == 9);
}

TEST_CASE("quarter-turn pair lands within 4 sigma of 1/8") {
  const SimulationConfig config{DetectionProfile::sin2(),
                                AngleVector{0.0, kPi / 2}, 1000000, 1};
  const auto result = simulate(config);
  CHECK(result.std_error == doctest::Approx(3.3e-4).epsilon(0.2));
  CHECK(std::abs(result.estimate - 0.125) <= 4.0 * result.std_error);
}

TEST_CASE("single observation lands within 4 sigma of 1/2") {
  const SimulationConfig config{DetectionProfile::sin2(), AngleVector{0.0},
                                1000000, 7};
  const auto result = simulate(config);
  CHECK(std::abs(result.estimate - 0.5) <= 4.0 * result.std_error);
}

TEST_CASE("same seed reproduces the estimate bit-for-bit") {
  const SimulationConfig config{DetectionProfile::sin2(),
                                AngleVector{0.2, 1.1}, 200000, 123456789};
  const auto first = simulate(config);
  const auto second = simulate(config);
  CHECK(first.estimate == second.estimate);
  CHECK(first.std_error == second.std_error);
}

TEST_CASE("std_error follows the plug-in binomial formula") {
  const SimulationConfig config{DetectionProfile::sin2(),
                                AngleVector{0.0, 0.9}, 50000, 4};
  const auto result = simulate(config);
  CHECK(result.std_error ==
        std::sqrt(result.estimate * (1.0 - result.estimate) / 50000.0));
}

TEST_CASE("estimates are invariant in distribution under rotation") {
  const SimulationConfig base{DetectionProfile::sin2(),
                              AngleVector{0.0, kPi / 2}, 400000, 5};
  const SimulationConfig rotated{DetectionProfile::sin2(),
                                 AngleVector{0.8, 0.8 + kPi / 2}, 400000, 6};
  const auto a = simulate(base);
  const auto b = simulate(rotated);
  const double combined =
      std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  CHECK(std::abs(a.estimate - b.estimate) <= 5.0 * combined);
}

TEST_CASE("sharded runs are deterministic and statistically consistent") {
  SimulationConfig config{DetectionProfile::sin2(), AngleVector{0.0, kPi / 2},
                          300001, 11};
  config.shards = 4;
  const auto first = simulate(config);
  const auto second = simulate(config);
  CHECK(first.estimate == second.estimate);
  CHECK(std::abs(first.estimate - 0.125) <= 5.0 * first.std_error);
  // A different shard count is a different (still valid) random stream.
  config.shards = 1;
  const auto sequential = simulate(config);
  CHECK(std::abs(sequential.estimate - 0.125) <= 5.0 * sequential.std_error);
}

TEST_CASE("simulate validates its configuration") {
  CHECK_THROWS_AS(
      simulate(SimulationConfig{DetectionProfile::sin2(), AngleVector{0.0}, 0,
                                1}),
      std::invalid_argument);
  SimulationConfig bad_shards{DetectionProfile::sin2(), AngleVector{0.0}, 10,
                              1};
  bad_shards.shards = 0;
  CHECK_THROWS_AS(simulate(bad_shards), std::invalid_argument);
}

TEST_CASE("estimates agree with quadrature across seeds and instances") {
  SplitMix64 rng(61);
  int failures = 0;
  const int runs = 40;
  for (int t = 0; t < runs; ++t) {
    const auto g = testutil::random_profile(rng, 3);
    const int n = 1 + static_cast<int>(rng.uniform01() * 3);
    const auto mu = testutil::random_angles(rng, n);
    const auto rule = QuadratureRule::for_product(n, g.max_harmonic());
    const double expected = no_detection_probability(g, mu, rule);
    const SimulationConfig config{g, mu, 100000, rng.next()};
    const auto result = simulate(config);
    const double sigma =
        std::max(result.std_error, std::sqrt(expected * (1.0 - expected) /
                                             100000.0));
    if (std::abs(result.estimate - expected) > 5.0 * sigma) ++failures;
  }
  CHECK(failures <= 1);  // 5-sigma misses should be essentially absent
}
