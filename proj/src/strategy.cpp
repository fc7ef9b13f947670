#include "aspectsearch/strategy.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "aspectsearch/errors.hpp"
#include "aspectsearch/ntheory.hpp"

namespace aspectsearch {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLowerBoundTolerance = 1e-12;
}  // namespace

StrategySpec make_strategy(int m, int n) {
  if (m < 1 || n < 1) {
    throw NonPositive("strategy: m and n must be >= 1, got (" +
                      std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  StrategySpec spec;
  spec.m = m;
  spec.n = n;
  spec.p = std::gcd(m, n);
  spec.q = m / spec.p;
  spec.r = n / spec.p;
  spec.step = m * kPi / n;
  return spec;
}

AngleVector strategy_angles(const StrategySpec& spec, double mu0) {
  std::vector<double> angles(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    angles[i] = wrap_angle(mu0 + i * spec.step);
  }
  return AngleVector(std::move(angles));
}

double cycle_product(const StrategySpec& spec, const DetectionProfile& g,
                     double x) {
  double product = 1.0;
  for (int j = 0; j < spec.r; ++j) product *= g.value(x + j * spec.step);
  return product;
}

double no_detection_probability(const DetectionProfile& g,
                                const StrategySpec& spec,
                                QuadratureRule rule) {
  return no_detection_probability(g, strategy_angles(spec), rule);
}

BigRational sin2_closed_form(const StrategySpec& spec) {
  BigInt numerator = BigInt(1) << spec.p;  // 2^p
  numerator *= double_factorial(2 * spec.p - 1);
  BigInt denominator = BigInt(1) << (2 * spec.n);  // 4^n
  for (int f = 2; f <= spec.p; ++f) denominator *= f;
  return BigRational(numerator, denominator);
}

double sin2_closed_form_value(const StrategySpec& spec) {
  return sin2_closed_form(spec).convert_to<double>();
}

double product_identity_residual(const StrategySpec& spec,
                                 const DetectionProfile& g,
                                 std::span<const double> xs) {
  const double unit = kPi / spec.n;
  double worst = 0.0;
  for (double x : xs) {
    double cycles = 1.0;  // prod_k h(x + (k-1) unit)
    for (int k = 1; k <= spec.p; ++k) {
      cycles *= cycle_product(spec, g, x + (k - 1) * unit);
    }
    double unit_steps = 1.0;  // prod_i g(x + i unit)
    double strategy_steps = 1.0;  // prod_i g(x + m*i*unit)
    for (int i = 0; i < spec.n; ++i) {
      unit_steps *= g.value(x + i * unit);
      strategy_steps *= g.value(x + i * spec.step);
    }
    double cycle_power = 1.0;  // h(x)^p
    const double h = cycle_product(spec, g, x);
    for (int k = 0; k < spec.p; ++k) cycle_power *= h;
    double one_cycle = 1.0;       // prod_j g(x + m*j*unit)
    double evenly_spread = 1.0;   // prod_j g(x + j pi/r)
    for (int j = 0; j < spec.r; ++j) {
      one_cycle *= g.value(x + j * spec.step);
      evenly_spread *= g.value(x + j * kPi / spec.r);
    }
    worst = std::max(worst, std::abs(cycles - unit_steps));
    worst = std::max(worst, std::abs(strategy_steps - cycle_power));
    worst = std::max(worst, std::abs(one_cycle - evenly_spread));
  }
  return worst;
}

std::vector<double> lower_bound_chain(const StrategySpec& spec,
                                      const DetectionProfile& g,
                                      QuadratureRule rule) {
  // Every chain integrand is a product of n profile factors (p*r = n).
  const int needed = exactness_nodes(spec.n, g.max_harmonic());
  if (rule.nodes < needed) {
    throw InsufficientNodes("lower_bound_chain: need at least " +
                            std::to_string(needed) + " nodes, got " +
                            std::to_string(rule.nodes));
  }
  const double unit = kPi / spec.n;
  std::vector<double> chain(spec.p);
  for (int l = 0; l < spec.p; ++l) {
    chain[l] = integrate_periodic(
                   [&](double x) {
                     double lambda = 1.0;
                     for (int k = 1; k <= spec.p - l; ++k) {
                       lambda *= cycle_product(spec, g, x + (k - 1) * unit);
                     }
                     const double h = cycle_product(spec, g, x);
                     for (int e = 0; e < l; ++e) lambda *= h;
                     return lambda;
                   },
                   rule) /
               kPi;
  }
  return chain;
}

LowerBoundReport check_lower_bound(const StrategySpec& spec,
                                   const DetectionProfile& g,
                                   QuadratureRule rule) {
  LowerBoundReport report;
  report.strategy_value = no_detection_probability(g, spec, rule);
  report.unit_step_value =
      no_detection_probability(g, make_strategy(1, spec.n), rule);
  report.holds =
      report.strategy_value >= report.unit_step_value - kLowerBoundTolerance;
  return report;
}

}  // namespace aspectsearch
