#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsing/mixed_polynomial.hpp"

namespace mixsing {

using Point = std::array<std::complex<double>, 2>;

struct NumericConfig {
  // Milnor-ball radius; chosen from the coefficient scale of F when unset.
  std::optional<double> epsilon;
  // Optional target-disk radii, checked against the critical values found.
  std::optional<double> delta;
  std::optional<double> delta_t;
  int seeds = 200;
  double accept_tol = 1e-10;
  // Relative to |z|.
  double cluster_tol = 1e-6;
  std::uint64_t seed = 1;
  // 0 uses the hardware concurrency.
  int threads = 0;
  // Deterministic grid over orbit space, merged with the seed results.
  bool sweep = true;
  std::array<int, 3> sweep_grid{32, 64, 32};
  int max_iterations = 300;
};

// Throws DomainError on invalid settings.
void validate(const NumericConfig& cfg);

// sqrt(sum of the six 2x2 minors^2) / |J|_F^2 for the real Jacobian of
// (Re F, Im F); 0 exactly when J = 0.
double singular_residual(const MixedPolynomial& f, const Point& z);

enum class MorseVerdict { indefinite, definite, unresolved };
std::string to_string(MorseVerdict v);

struct MorseProbe {
  MorseVerdict verdict = MorseVerdict::unresolved;
  // Negative eigenvalues of the Hessian of |F| on the slice normal to the orbit.
  int index = -1;
  std::array<double, 3> eigenvalues{0, 0, 0};
};

// Throws DomainError when w is not a fold point to within 1e-8.
MorseProbe morse_index_probe(const MixedPolynomial& f, const Point& w);

struct FoldOrbit {
  Point point;
  double critical_value = 0;
  double residual = 0;
  int hits = 0;
  MorseProbe morse;
};

struct CriticalCircle {
  double radius = 0;
  int orbits = 0;
};

struct SeedStats {
  int seeds = 0;
  int converged = 0;
  int outside_ball = 0;
  int near_origin = 0;
  int not_converged = 0;
  int sweep_candidates = 0;
  int sweep_converged = 0;
  double converged_fraction() const { return seeds > 0 ? static_cast<double>(converged) / seeds : 0.0; }
};

enum class FoldVerdict { count, inconclusive, degenerate };
std::string to_string(FoldVerdict v);

struct FoldOrbitReport {
  FoldVerdict verdict = FoldVerdict::inconclusive;
  std::string reason;
  double epsilon = 0;
  std::vector<FoldOrbit> orbits;
  int orbit_count = 0;
  // Sorted critical-value radii, one per circle.
  std::vector<CriticalCircle> circles;
  double residual = 0;
  SeedStats stats;
  // Sum of (-1)^index over the orbits; -ell for a decomposition with ell index-1 handles.
  int morse_balance = 0;
  // Largest admissible delta_t (the smallest critical radius).
  std::optional<double> delta_t_bound;
  bool radii_config_ok = true;

  std::vector<Point> representative_points() const;
  std::vector<double> radii() const;
};

FoldOrbitReport find_fold_orbits(const MixedPolynomial& f, const NumericConfig& cfg);

// Distance between the S^1-orbit of a (under the polar weights) and b.
double orbit_distance(const Point& a, const Point& b, const std::array<std::int64_t, 2>& weights);

// Radius scale where the top and bottom radial-degree parts of f balance.
double auto_epsilon(const MixedPolynomial& f);

}  // namespace mixsing
