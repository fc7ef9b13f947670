#include "aspectsearch/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aspectsearch/rng.hpp"

namespace aspectsearch {

SimulationResult simulate(const SimulationConfig& config) {
  if (config.trials < 1) {
    throw std::invalid_argument("simulate: trials must be >= 1");
  }
  if (config.shards < 1) {
    throw std::invalid_argument("simulate: shards must be >= 1");
  }

  const long long per_shard = config.trials / config.shards;
  const long long remainder = config.trials % config.shards;
  long long missed = 0;

  for (int s = 0; s < config.shards; ++s) {
    SplitMix64 rng(shard_seed(config.seed, static_cast<std::uint64_t>(s)));
    const long long shard_trials = per_shard + (s < remainder ? 1 : 0);
    for (long long t = 0; t < shard_trials; ++t) {
      const double orientation =
          (rng.uniform01() - 0.5) * std::numbers::pi;
      bool all_missed = true;
      for (double mu : config.angles) {
        // This observation misses with probability g(x + mu).
        if (rng.uniform01() >= config.profile.value(orientation + mu)) {
          all_missed = false;
          break;
        }
      }
      if (all_missed) ++missed;
    }
  }

  SimulationResult result;
  result.trials = config.trials;
  result.seed = config.seed;
  result.estimate =
      static_cast<double>(missed) / static_cast<double>(config.trials);
  result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) /
                               static_cast<double>(config.trials));
  return result;
}

}  // namespace aspectsearch
