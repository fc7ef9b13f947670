#include "aspectsearch/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aspectsearch/errors.hpp"

namespace aspectsearch {

namespace {

// A degree-K trig polynomial with coefficients of accepted magnitude cannot
// hide an excursion larger than the tolerance between nodes at this density.
constexpr int kGridPointsPerHarmonic = 4 * 32;
constexpr double kRangeTolerance = 1e-9;

}  // namespace

DetectionProfile::DetectionProfile(std::vector<double> coeffs,
                                   std::string name)
    : coeffs_(std::move(coeffs)), name_(std::move(name)) {
  if (coeffs_.empty()) {
    throw EmptyCoefficients("profile: coefficient list is empty");
  }
  for (double a : coeffs_) {
    if (!std::isfinite(a)) {
      throw RangeViolation("profile: non-finite coefficient");
    }
  }
  const int points = kGridPointsPerHarmonic * static_cast<int>(coeffs_.size());
  double lo = coeffs_[0];
  double hi = coeffs_[0];
  for (int t = 0; t < points; ++t) {
    const double g = value(t * std::numbers::pi / points);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  if (lo < -kRangeTolerance || hi > 1.0 + kRangeTolerance) {
    throw RangeViolation("profile: g(x) leaves [0, 1] (grid min " +
                         std::to_string(lo) + ", max " + std::to_string(hi) +
                         ")");
  }
}

DetectionProfile DetectionProfile::sin2() {
  return DetectionProfile({0.5, -0.5}, "sin2");
}

double DetectionProfile::value(double x) const {
  double g = coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    g += coeffs_[k] * std::cos(2.0 * static_cast<double>(k) * x);
  }
  return g;
}

double DetectionProfile::derivative(double x) const {
  double d = 0.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k);
    d -= two_k * coeffs_[k] * std::sin(two_k * x);
  }
  return d;
}

}  // namespace aspectsearch
