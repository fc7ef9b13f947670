#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <vector>

#include "aspectsearch/errors.hpp"
#include "aspectsearch/profile.hpp"

namespace aspectsearch {

/// Wraps an angle into [0, pi). Observation angles are pi-periodic.
double wrap_angle(double x);

/// Ordered list of n >= 1 observation angles, radians, all finite.
class AngleVector {
 public:
  explicit AngleVector(std::vector<double> angles);
  AngleVector(std::initializer_list<double> angles);

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  const std::vector<double>& values() const { return angles_; }

  auto begin() const { return angles_.begin(); }
  auto end() const { return angles_.end(); }

  /// Every entry wrapped to [0, pi).
  AngleVector normalized() const;

 private:
  std::vector<double> angles_;
};

/// Midpoint rule with M uniform nodes on [-pi/2, pi/2):
/// x_s = -pi/2 + (s + 1/2) pi/M, weight pi/M.
///
/// For pi-periodic integrands this rule is spectrally accurate, and it is
/// exact (to roundoff) for trig polynomials in cos(2kx), sin(2kx) with
/// max harmonic k <= M - 1. That makes exactness checkable a priori for
/// products of cosine-series profiles: n factors of max harmonic K need
/// M >= n*K + 1.
struct QuadratureRule {
  int nodes;

  explicit QuadratureRule(int node_count);

  double node(int s) const {
    return (s + 0.5) * (std::numbers::pi / nodes) - std::numbers::pi / 2;
  }
  double weight() const { return std::numbers::pi / nodes; }

  /// Default sizing for a product of `factors` profile factors of max
  /// harmonic `max_harmonic`: max(factors*max_harmonic + 1, 64) rounded up
  /// to the next power of two. Exactness plus headroom.
  static QuadratureRule for_product(int factors, int max_harmonic);
};

/// Nodes required for exact integration of a product of `factors` cosine
/// series of max harmonic `max_harmonic`.
inline int exactness_nodes(int factors, int max_harmonic) {
  return factors * max_harmonic + 1;
}

/// Sum_s f(x_s) * pi/M. Exact whenever f is a trig polynomial with max
/// harmonic index <= M - 1 in the cos 2x basis (caller guarantees f is
/// pi-periodic).
template <class F>
double integrate_periodic(F&& f, QuadratureRule rule) {
  double sum = 0.0;
  for (int s = 0; s < rule.nodes; ++s) sum += f(rule.node(s));
  return sum * rule.weight();
}

/// Average probability that all n observations miss the target when its
/// orientation is uniformly distributed:
///
///     G(mu) = (1/pi) * integral over one period of prod_i g(x + mu_i).
///
/// Throws InsufficientNodes when rule.nodes < n*K + 1, the bound below which
/// the quadrature stops being exact.
double no_detection_probability(const DetectionProfile& g,
                                const AngleVector& mu, QuadratureRule rule);

/// Partial derivatives (d G / d mu_0, ..., d G / d mu_{n-1}), each evaluated
/// as (1/pi) * integral of g'(x) * prod_{j != i} g(x + mu_j - mu_i).
std::vector<double> gradient(const DetectionProfile& g, const AngleVector& mu,
                             QuadratureRule rule);

/// Same derivatives from the antisymmetrized integrand
/// (1/2pi) * integral of g'(x) * [prod g(x + mu_j - mu_i)
///                                - prod g(x - mu_j + mu_i)];
/// twice the evaluations of `gradient`, kept as an independent cross-check.
std::vector<double> gradient_symmetric(const DetectionProfile& g,
                                       const AngleVector& mu,
                                       QuadratureRule rule);

inline double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace aspectsearch
