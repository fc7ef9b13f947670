#pragma once

#include <stdexcept>

namespace aspectsearch {

// Invalid-model and invalid-argument conditions. The CLI maps every one of
// these to exit code 2.

struct EmptyCoefficients : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The cosine series leaves [0, 1] somewhere on its period, so it cannot be
/// a probability.
struct RangeViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonPositive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// reflect_index queried at its excluded fixed point j == i.
struct FixedPointQuery : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The stride map q*j mod r is a bijection only when gcd(q, r) = 1.
struct NotCoprime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive search was asked for a lattice that would blow up.
struct ProblemTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A quadrature rule was supplied with fewer nodes than the exactness bound
/// for the requested integrand; the result would be silently inaccurate.
/// The CLI maps this to exit code 3.
struct InsufficientNodes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aspectsearch
