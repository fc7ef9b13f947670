#include "aspectsearch/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "aspectsearch/errors.hpp"
#include "aspectsearch/rng.hpp"

namespace aspectsearch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kArmijoSlope = 1e-4;
constexpr double kBacktrackShrink = 0.5;
constexpr double kInitialStep = 0.5;
constexpr double kMinStep = 1e-16;

OptimizationResult finish(const DetectionProfile& g, std::vector<double> mu,
                          QuadratureRule rule, int iterations,
                          bool converged) {
  for (double& a : mu) a = wrap_angle(a);
  std::sort(mu.begin(), mu.end());
  AngleVector angles(std::move(mu));
  const double value = no_detection_probability(g, angles, rule);
  const double norm = inf_norm(gradient(g, angles, rule));
  return {std::move(angles), value, norm, iterations, converged};
}

}  // namespace

StationarityReport stationarity_check(const DetectionProfile& g,
                                      const AngleVector& mu,
                                      QuadratureRule rule, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("stationarity_check: tol must be > 0");
  }
  const double norm = inf_norm(gradient(g, mu, rule));
  return {norm, norm <= tol};
}

AngleVector random_angles(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_angles: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> angles(n, 0.0);
  for (int i = 1; i < n; ++i) angles[i] = rng.uniform01() * kPi;
  return AngleVector(std::move(angles));
}

OptimizationResult local_minimize(const DetectionProfile& g,
                                  const AngleVector& init, QuadratureRule rule,
                                  DescentOptions opts) {
  const int n = static_cast<int>(init.size());
  if (n < 2) {
    throw std::invalid_argument(
        "local_minimize: need n >= 2 (one observation has a constant "
        "no-detection probability)");
  }
  if (opts.max_iter < 0 || !(opts.tol > 0.0)) {
    throw std::invalid_argument("local_minimize: bad options");
  }

  // Gauge-fix: rotate the start so mu_0 = 0; only separations matter.
  std::vector<double> mu = init.values();
  const double reference = mu[0];
  for (double& a : mu) a -= reference;

  double value = no_detection_probability(g, AngleVector(mu), rule);
  std::vector<double> grad = gradient(g, AngleVector(mu), rule);
  int iterations = 0;

  while (inf_norm(grad) > opts.tol && iterations < opts.max_iter) {
    double descent = 0.0;  // squared norm of the reduced gradient
    for (int i = 1; i < n; ++i) descent += grad[i] * grad[i];
    if (descent == 0.0) break;  // flat in every free direction

    // Near a minimum the sufficient-decrease margin drops below what the
    // objective can resolve in floating point; a step that does not make
    // things measurably worse is then still a contraction.
    const double resolution =
        32.0 * std::numeric_limits<double>::epsilon() * (1.0 + value);

    double step = kInitialStep;
    std::vector<double> trial = mu;
    bool accepted = false;
    while (step >= kMinStep) {
      for (int i = 1; i < n; ++i) trial[i] = mu[i] - step * grad[i];
      const double trial_value =
          no_detection_probability(g, AngleVector(trial), rule);
      const double required = kArmijoSlope * step * descent;
      if (trial_value <= value - required ||
          (required < resolution && trial_value <= value + resolution)) {
        value = trial_value;
        mu = trial;
        accepted = true;
        break;
      }
      step *= kBacktrackShrink;
    }
    if (!accepted) break;  // line search exhausted

    ++iterations;
    grad = gradient(g, AngleVector(mu), rule);
  }

  return finish(g, std::move(mu), rule, iterations,
                inf_norm(grad) <= opts.tol);
}

OptimizationResult grid_search(const DetectionProfile& g, int n,
                               double resolution, QuadratureRule rule) {
  if (n > 3) {
    throw ProblemTooLarge("grid_search: lattice blows up for n > 3, got n = " +
                          std::to_string(n));
  }
  if (n < 2) {
    throw std::invalid_argument("grid_search: need n in {2, 3}");
  }
  if (!(resolution > 0.0) || resolution > kPi) {
    throw std::invalid_argument("grid_search: resolution must be in (0, pi]");
  }
  const int needed = exactness_nodes(n, g.max_harmonic());
  if (rule.nodes < needed) {
    throw InsufficientNodes("grid_search: need at least " +
                            std::to_string(needed) + " quadrature nodes");
  }

  const int lattice = static_cast<int>(std::floor(kPi / resolution + 1e-9));
  // When the resolution divides pi the lattice points are written as
  // pi * (k / lattice); dyadic ratios like 180/360 then give exact angles.
  const bool divides = std::abs(lattice * resolution - kPi) <= 1e-9;
  auto lattice_angle = [&](int k) {
    return divides ? kPi * (static_cast<double>(k) / lattice)
                   : k * resolution;
  };

  const int nodes = rule.nodes;
  std::vector<double> table(static_cast<std::size_t>(lattice) * nodes);
  for (int k = 0; k < lattice; ++k) {
    const double angle = lattice_angle(k);
    for (int s = 0; s < nodes; ++s) {
      table[static_cast<std::size_t>(k) * nodes + s] =
          g.value(rule.node(s) + angle);
    }
  }
  const double* base = table.data();  // offset 0 row = the fixed mu_0 = 0

  // Products are accumulated in ascending offset order so permuted lattice
  // points evaluate bit-identically and ties resolve lexicographically.
  auto value_at = [&](int a, int b) {  // b < 0 means n = 2
    const double* row_a = table.data() + static_cast<std::size_t>(a) * nodes;
    const double* row_b =
        b < 0 ? nullptr : table.data() + static_cast<std::size_t>(b) * nodes;
    double sum = 0.0;
    for (int s = 0; s < nodes; ++s) {
      double product = base[s] * row_a[s];
      if (row_b) product *= row_b[s];
      sum += product;
    }
    return sum / nodes;  // (1/pi) * weight = 1/M
  };

  double best = 2.0;
  int best_k1 = 0;
  int best_k2 = -1;
  long long evaluated = 0;
  if (n == 2) {
    for (int k1 = 0; k1 < lattice; ++k1, ++evaluated) {
      const double v = value_at(k1, -1);
      if (v < best) {
        best = v;
        best_k1 = k1;
      }
    }
  } else {
    for (int k1 = 0; k1 < lattice; ++k1) {
      for (int k2 = 0; k2 < lattice; ++k2, ++evaluated) {
        const double v = value_at(std::min(k1, k2), std::max(k1, k2));
        if (v < best) {
          best = v;
          best_k1 = k1;
          best_k2 = k2;
        }
      }
    }
  }

  std::vector<double> angles{0.0, lattice_angle(best_k1)};
  if (n == 3) angles.push_back(lattice_angle(best_k2));
  AngleVector result(std::move(angles));
  const double norm = inf_norm(gradient(g, result, rule));
  return {std::move(result), best, norm,
          static_cast<int>(std::min<long long>(evaluated, INT32_MAX)), true};
}

}  // namespace aspectsearch
