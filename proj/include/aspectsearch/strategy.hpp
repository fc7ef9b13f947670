#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aspectsearch/profile.hpp"
#include "aspectsearch/quadrature.hpp"

namespace aspectsearch {

using BigRational = boost::multiprecision::cpp_rational;

/// An (m, n) evenly-spaced strategy: n observations with constant separation
/// m*pi/n between consecutive ones. Every such strategy is a stationary
/// point of the no-detection probability.
///
/// The gcd decomposition p = gcd(m, n), m = p*q, n = p*r controls how many
/// distinct effective angles the strategy visits (r) and with what
/// multiplicity (p). m may exceed n and may share factors with n; m = 0 mod n
/// degenerates to all observations at one effective angle (p = n, r = 1).
struct StrategySpec {
  int m = 1;
  int n = 1;
  int p = 1;  // gcd(m, n)
  int q = 1;  // m / p
  int r = 1;  // n / p
  double step = 0.0;  // m*pi/n, separation between consecutive observations
};

/// Throws NonPositive unless m >= 1 and n >= 1.
StrategySpec make_strategy(int m, int n);

/// The strategy's angles (mu0, mu0 + m pi/n, ..., mu0 + (n-1) m pi/n),
/// wrapped to [0, pi). mu0 is the free absolute reference angle.
AngleVector strategy_angles(const StrategySpec& spec, double mu0 = 0.0);

/// Product of g over the strategy's r distinct effective angles, one cycle:
/// prod_{j=0..r-1} g(x + j*m*pi/n). Even and pi-periodic in x.
double cycle_product(const StrategySpec& spec, const DetectionProfile& g,
                     double x);

/// No-detection probability of the (m, n) strategy, evaluated with the same
/// quadrature kernel as the general angle-vector form (the two agree
/// because only consecutive separations matter).
double no_detection_probability(const DetectionProfile& g,
                                const StrategySpec& spec, QuadratureRule rule);

/// Exact value of the strategy's no-detection probability for g = sin^2:
///
///     2^p (2p-1)!! / (4^n p!)
///
/// computed in integer arithmetic and reduced.
BigRational sin2_closed_form(const StrategySpec& spec);

/// sin2_closed_form rounded to double.
double sin2_closed_form_value(const StrategySpec& spec);

/// Max residual over `xs` of the three product identities the strategy
/// analysis rests on (with mu = pi/n and h = cycle_product):
///
///   prod_{k=1..p} h(x + (k-1) mu)    == prod_{i=0..n-1} g(x + i mu)
///   prod_{i=0..n-1} g(x + m*i*mu)    == h(x)^p
///   prod_{j=0..r-1} g(x + m*j*mu)    == prod_{j=0..r-1} g(x + j pi/r)
double product_identity_residual(const StrategySpec& spec,
                                 const DetectionProfile& g,
                                 std::span<const double> xs);

/// The chain of integrals I_l = (1/pi) * integral of
/// lambda_l(x) * h(x)^l, l = 0..p-1, where
/// lambda_l(x) = prod_{k=1..p-l} h(x + (k-1) pi/n).
///
/// I_0 is the unit-step strategy's value, I_{p-1} the (m, n) strategy's, and
/// the sequence is nondecreasing -- the observable content of the lower
/// bound proof.
std::vector<double> lower_bound_chain(const StrategySpec& spec,
                                      const DetectionProfile& g,
                                      QuadratureRule rule);

struct LowerBoundReport {
  double strategy_value = 0.0;   // (m, n) strategy
  double unit_step_value = 0.0;  // (1, n) strategy, the lower bound
  bool holds = false;
};

/// Checks strategy_value >= unit_step_value - 1e-12 by exact quadrature.
LowerBoundReport check_lower_bound(const StrategySpec& spec,
                                   const DetectionProfile& g,
                                   QuadratureRule rule);

/// Parses `{"m":2,"n":4}` into a strategy, or `{"angles":[...]}` (radians)
/// into an explicit angle vector.
struct StrategyDescriptor {
  bool has_strategy = false;
  StrategySpec spec;
  std::vector<double> angles;
};
StrategyDescriptor strategy_from_json(const std::string& text);

}  // namespace aspectsearch
