#pragma once

#include <cstdint>

#include "aspectsearch/profile.hpp"
#include "aspectsearch/quadrature.hpp"

namespace aspectsearch {

/// Direct simulation of the detection process: per trial, draw a target
/// orientation uniform on [-pi/2, pi/2), then let each observation i
/// independently detect with probability 1 - g(x + mu_i).
struct SimulationConfig {
  DetectionProfile profile;
  AngleVector angles;
  long long trials = 0;
  std::uint64_t seed = 0;
  /// Trials may be split across independent shards; shard s draws from
  /// shard_seed(seed, s) and the per-shard counts are summed, so the result
  /// is deterministic given (seed, shards). shards = 1 is the sequential
  /// reference mode.
  int shards = 1;
};

struct SimulationResult {
  double estimate = 0.0;   // fraction of trials where every observation missed
  double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / trials)
  long long trials = 0;
  std::uint64_t seed = 0;
};

/// Runs the Bernoulli trials. Deterministic for a fixed (seed, shards).
SimulationResult simulate(const SimulationConfig& config);

}  // namespace aspectsearch
