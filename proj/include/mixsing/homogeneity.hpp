#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "mixsing/mixed_polynomial.hpp"

namespace mixsing {

using WeightPair = std::array<std::int64_t, 2>;

struct PolarWeight {
  WeightPair weight{0, 0};
  std::int64_t degree = 0;
  // All terms share one exponent vector, so the weight was completed by convention.
  bool ambiguous = false;
  bool negative_weight = false;
};

struct RadialWeight {
  WeightPair weight{0, 0};
  std::int64_t degree = 0;
  bool ambiguous = false;
};

struct WeightData {
  WeightPair polar_weight{0, 0};
  std::int64_t d_p = 0;
  WeightPair radial_weight{0, 0};
  std::int64_t d_r = 0;
  bool ambiguous = false;
};

// Both throw DomainError on the zero polynomial; nullopt means "not homogeneous".
std::optional<PolarWeight> detect_polar(const MixedPolynomial& p);
std::optional<RadialWeight> detect_radial(const MixedPolynomial& p);
std::optional<WeightData> detect_weights(const MixedPolynomial& p);

// Exact per-term checks.
bool satisfies_polar(const MixedPolynomial& p, const WeightPair& w, std::int64_t d);
bool satisfies_radial(const MixedPolynomial& p, const WeightPair& w, std::int64_t d);

struct EquivarianceReport {
  double max_polar_residual = 0;
  double max_radial_residual = 0;
  int samples = 0;
  bool passed = false;
};

// Residuals are |P(s.z) - s^d_p P(z)| / max(1, |P(z)|) over s in S^1, |z| <= 1,
// and |P(r.z) - r^d_r P(z)| / max(1, |r^d_r P(z)|) over r in [0.5, 2].
EquivarianceReport check_equivariance(const MixedPolynomial& p, const WeightData& w, int samples, double tol,
                                      std::uint64_t seed = 1);

}  // namespace mixsing
