#pragma once

#include <cstdint>

#include "aspectsearch/profile.hpp"
#include "aspectsearch/quadrature.hpp"

namespace aspectsearch {

struct StationarityReport {
  double gradient_norm = 0.0;  // inf-norm of the analytic gradient
  bool stationary = false;
};

/// Is mu a stationary point of the no-detection probability, to tolerance?
StationarityReport stationarity_check(const DetectionProfile& g,
                                      const AngleVector& mu,
                                      QuadratureRule rule, double tol);

struct DescentOptions {
  int max_iter = 500;
  double tol = 1e-10;  // on the gradient inf-norm
};

struct OptimizationResult {
  /// Normalized to [0, pi) and sorted ascending; angles[0] == 0 because the
  /// first angle is gauge-fixed (only separations matter).
  AngleVector angles;
  double value = 1.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// n angles with the first fixed at 0 and the rest uniform on [0, pi);
/// deterministic in the seed.
AngleVector random_angles(int n, std::uint64_t seed);

/// Gradient descent with Armijo backtracking on the reduced coordinates
/// (mu_1..mu_{n-1}, mu_0 fixed at 0), driven by the analytic gradient.
/// Requires n >= 2 (with one observation the probability is constant).
/// Non-convergence is reported through converged = false, not an error.
OptimizationResult local_minimize(const DetectionProfile& g,
                                  const AngleVector& init, QuadratureRule rule,
                                  DescentOptions opts = {});

/// Exhaustive scan of the lattice mu_0 = 0, mu_i in {0, res, 2 res, ...}
/// covering [0, pi). Only n = 2 and n = 3 are allowed (the lattice blows up
/// beyond that; throws ProblemTooLarge). Ties pick the lexicographically
/// smallest lattice point.
OptimizationResult grid_search(const DetectionProfile& g, int n,
                               double resolution, QuadratureRule rule);

}  // namespace aspectsearch
