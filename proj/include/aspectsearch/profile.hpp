#pragma once

#include <string>
#include <vector>

namespace aspectsearch {

/// Probability that a single observation at relative angle x (radians) fails
/// to detect the target.
///
/// Stored as a finite cosine series
///
///     g(x) = a_0 + sum_{k=1..K} a_k cos(2kx),
///
/// which is even and pi-periodic by construction -- the two symmetries a
/// rectangularly symmetric target imposes on g. Construction validates
/// 0 <= g <= 1 on a dense grid and rejects coefficient lists that leave that
/// range; evaluation never clamps, a validated profile is trusted.
///
/// Immutable after construction; safe to share across threads.
class DetectionProfile {
 public:
  /// Throws EmptyCoefficients or RangeViolation.
  explicit DetectionProfile(std::vector<double> coeffs, std::string name = {});

  /// g(x) = sin^2 x = 1/2 - (1/2) cos 2x.
  static DetectionProfile sin2();

  /// g(x).
  double value(double x) const;

  /// g'(x) = -sum_k 2k a_k sin(2kx); odd in x.
  double derivative(double x) const;

  double operator()(double x) const { return value(x); }

  /// K, the largest harmonic index of the series.
  int max_harmonic() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<double>& coeffs() const { return coeffs_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<double> coeffs_;
  std::string name_;
};

/// Parses `{"type":"sin2"}` or `{"type":"cosine","coeffs":[a0,a1,...]}`.
/// Throws std::invalid_argument on malformed input, and the usual
/// construction errors on an invalid coefficient list.
DetectionProfile profile_from_json(const std::string& text);

}  // namespace aspectsearch
