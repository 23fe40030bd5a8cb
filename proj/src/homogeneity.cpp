#include "mixsing/homogeneity.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "mixsing/error.hpp"

namespace mixsing {

namespace {

using Vec2 = std::array<std::int64_t, 2>;

struct Solution {
  WeightPair weight;
  std::int64_t degree;
  bool ambiguous;
};

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("weight computation overflow");
  return static_cast<std::int64_t>(v);
}

__int128 dot(const WeightPair& w, const Vec2& v) {
  return static_cast<__int128>(w[0]) * v[0] + static_cast<__int128>(w[1]) * v[1];
}

// Smallest |w1|+|w2| pair with gcd 1 and positive degree on v; (1,1) first,
// positive pairs before mixed-sign ones.
std::optional<WeightPair> complete_weight(const Vec2& v, bool positive_only) {
  for (std::int64_t s = 2; s <= 256; ++s) {
    for (std::int64_t a = 1; a < s; ++a) {
      WeightPair w{a, s - a};
      if (std::gcd(w[0], w[1]) == 1 && dot(w, v) > 0) return w;
    }
    if (positive_only) continue;
    for (std::int64_t a = -s; a <= s; ++a) {
      std::int64_t rest = s - (a < 0 ? -a : a);
      for (std::int64_t b : {rest, -rest}) {
        if ((a > 0 && b > 0) || (b == -rest && rest == 0)) continue;
        WeightPair w{a, b};
        if (std::gcd(a, b) == 1 && dot(w, v) > 0) return w;
      }
    }
  }
  return std::nullopt;
}

// Solves w . v_i = d for all i with gcd(w) = 1 and d > 0.
std::optional<Solution> solve(const std::vector<Vec2>& vs, bool positive_only) {
  const Vec2& v0 = vs.front();
  const Vec2* v1 = nullptr;
  for (const auto& v : vs) {
    if (v != v0) {
      v1 = &v;
      break;
    }
  }
  if (v1 == nullptr) {
    auto w = complete_weight(v0, positive_only);
    if (!w) return std::nullopt;
    return Solution{*w, narrow(dot(*w, v0)), true};
  }
  // Kernel of rows (v0, -1), (v1, -1) is their cross product; its first two
  // entries give the weight up to scale.
  WeightPair w{narrow(static_cast<__int128>((*v1)[1]) - v0[1]), narrow(static_cast<__int128>(v0[0]) - (*v1)[0])};
  std::int64_t g = std::gcd(w[0], w[1]);
  if (g == 0) return std::nullopt;
  w = {w[0] / g, w[1] / g};
  __int128 d = dot(w, v0);
  if (d == 0) return std::nullopt;
  if (d < 0) {
    w = {-w[0], -w[1]};
    d = -d;
  }
  for (const auto& v : vs) {
    if (dot(w, v) != d) return std::nullopt;
  }
  if (positive_only && (w[0] <= 0 || w[1] <= 0)) return std::nullopt;
  return Solution{w, narrow(d), false};
}

std::vector<Vec2> vectors(const MixedPolynomial& p, bool polar) {
  if (p.is_zero()) throw DomainError("zero polynomial has no weights");
  std::vector<Vec2> vs;
  for (const auto& t : p.terms()) {
    if (polar) {
      vs.push_back({t.nu[0] - t.mu[0], t.nu[1] - t.mu[1]});
    } else {
      vs.push_back({checked_add(t.nu[0], t.mu[0]), checked_add(t.nu[1], t.mu[1])});
    }
  }
  return vs;
}

}  // namespace

std::optional<PolarWeight> detect_polar(const MixedPolynomial& p) {
  auto s = solve(vectors(p, true), false);
  if (!s) return std::nullopt;
  return PolarWeight{s->weight, s->degree, s->ambiguous, s->weight[0] < 0 || s->weight[1] < 0};
}

std::optional<RadialWeight> detect_radial(const MixedPolynomial& p) {
  auto s = solve(vectors(p, false), true);
  if (!s) return std::nullopt;
  return RadialWeight{s->weight, s->degree, s->ambiguous};
}

std::optional<WeightData> detect_weights(const MixedPolynomial& p) {
  auto polar = detect_polar(p);
  auto radial = detect_radial(p);
  if (!polar || !radial) return std::nullopt;
  return WeightData{polar->weight, polar->degree, radial->weight, radial->degree,
                    polar->ambiguous || radial->ambiguous};
}

bool satisfies_polar(const MixedPolynomial& p, const WeightPair& w, std::int64_t d) {
  for (const auto& v : vectors(p, true)) {
    if (dot(w, v) != d) return false;
  }
  return true;
}

bool satisfies_radial(const MixedPolynomial& p, const WeightPair& w, std::int64_t d) {
  for (const auto& v : vectors(p, false)) {
    if (dot(w, v) != d) return false;
  }
  return true;
}

EquivarianceReport check_equivariance(const MixedPolynomial& p, const WeightData& w, int samples, double tol,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;
  EquivarianceReport rep;
  rep.samples = samples;
  for (int k = 0; k < samples; ++k) {
    double x[4];
    double norm = 0;
    for (double& c : x) {
      c = normal(rng);
      norm += c * c;
    }
    double radius = std::sqrt(unit(rng)) / std::sqrt(norm);
    std::complex<double> z1(x[0] * radius, x[1] * radius), z2(x[2] * radius, x[3] * radius);
    std::complex<double> base = evaluate(p, z1, z2);

    double theta = angle(rng);
    auto s_pow = [theta](std::int64_t e) { return std::polar(1.0, theta * static_cast<double>(e)); };
    std::complex<double> polar =
        evaluate(p, s_pow(w.polar_weight[0]) * z1, s_pow(w.polar_weight[1]) * z2) - s_pow(w.d_p) * base;
    rep.max_polar_residual = std::max(rep.max_polar_residual, std::abs(polar) / std::max(1.0, std::abs(base)));

    double r = 0.5 + 1.5 * unit(rng);
    auto r_pow = [r](std::int64_t e) { return std::pow(r, static_cast<double>(e)); };
    std::complex<double> expected = r_pow(w.d_r) * base;
    std::complex<double> radial = evaluate(p, r_pow(w.radial_weight[0]) * z1, r_pow(w.radial_weight[1]) * z2) - expected;
    rep.max_radial_residual = std::max(rep.max_radial_residual, std::abs(radial) / std::max(1.0, std::abs(expected)));
  }
  rep.passed = rep.max_polar_residual <= tol && rep.max_radial_residual <= tol;
  return rep;
}

}  // namespace mixsing
