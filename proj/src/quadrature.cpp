#include "aspectsearch/quadrature.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace aspectsearch {

namespace {

constexpr double kPi = std::numbers::pi;

void require_exactness(QuadratureRule rule, int factors, int max_harmonic) {
  const int needed = exactness_nodes(factors, max_harmonic);
  if (rule.nodes < needed) {
    throw InsufficientNodes("quadrature: " + std::to_string(rule.nodes) +
                            " nodes, but a product of " +
                            std::to_string(factors) +
                            " factors of max harmonic " +
                            std::to_string(max_harmonic) + " needs at least " +
                            std::to_string(needed));
  }
}

}  // namespace

double wrap_angle(double x) {
  double a = std::fmod(x, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;  // fmod(x, pi) = -tiny can round up to pi
  return a;
}

AngleVector::AngleVector(std::vector<double> angles)
    : angles_(std::move(angles)) {
  if (angles_.empty()) {
    throw std::invalid_argument("angles: need at least one observation");
  }
  for (double a : angles_) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("angles: non-finite entry");
    }
  }
}

AngleVector::AngleVector(std::initializer_list<double> angles)
    : AngleVector(std::vector<double>(angles)) {}

AngleVector AngleVector::normalized() const {
  std::vector<double> wrapped(angles_.size());
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    wrapped[i] = wrap_angle(angles_[i]);
  }
  return AngleVector(std::move(wrapped));
}

QuadratureRule::QuadratureRule(int node_count) : nodes(node_count) {
  if (nodes < 1) {
    throw std::invalid_argument("quadrature: node count must be >= 1");
  }
}

QuadratureRule QuadratureRule::for_product(int factors, int max_harmonic) {
  const int minimum = std::max(exactness_nodes(factors, max_harmonic), 64);
  return QuadratureRule(static_cast<int>(
      std::bit_ceil(static_cast<unsigned>(minimum))));
}

double no_detection_probability(const DetectionProfile& g,
                                const AngleVector& mu, QuadratureRule rule) {
  const int n = static_cast<int>(mu.size());
  require_exactness(rule, n, g.max_harmonic());
  const double integral = integrate_periodic(
      [&](double x) {
        double product = 1.0;
        for (double angle : mu) product *= g.value(x + angle);
        return product;
      },
      rule);
  return integral / kPi;
}

std::vector<double> gradient(const DetectionProfile& g, const AngleVector& mu,
                             QuadratureRule rule) {
  const int n = static_cast<int>(mu.size());
  require_exactness(rule, n, g.max_harmonic());
  std::vector<double> partials(n);
  for (int i = 0; i < n; ++i) {
    const double integral = integrate_periodic(
        [&](double x) {
          double product = g.derivative(x);
          for (int j = 0; j < n; ++j) {
            if (j != i) product *= g.value(x + mu[j] - mu[i]);
          }
          return product;
        },
        rule);
    partials[i] = integral / kPi;
  }
  return partials;
}

std::vector<double> gradient_symmetric(const DetectionProfile& g,
                                       const AngleVector& mu,
                                       QuadratureRule rule) {
  const int n = static_cast<int>(mu.size());
  require_exactness(rule, n, g.max_harmonic());
  std::vector<double> partials(n);
  for (int i = 0; i < n; ++i) {
    const double integral = integrate_periodic(
        [&](double x) {
          double forward = 1.0;
          double backward = 1.0;
          for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            forward *= g.value(x + mu[j] - mu[i]);
            backward *= g.value(x - mu[j] + mu[i]);
          }
          return 0.5 * g.derivative(x) * (forward - backward);
        },
        rule);
    partials[i] = integral / kPi;
  }
  return partials;
}

}  // namespace aspectsearch
