#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mixsing/mixed_polynomial.hpp"

namespace mixsing {

// f = c * prod_j (z1^p + alpha_j z2^q), g = c' * prod_j (z1^p + beta_j z2^q).
struct SeifertLinkData {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<std::complex<double>> alphas;
  std::vector<std::complex<double>> betas;
};

struct LinkCounts {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  friend bool operator==(const LinkCounts&, const LinkCounts&) = default;
};

inline constexpr double kRootSeparation = 1e-8;

// g may be zero or a nonzero constant (n = 0). Throws DomainError.
SeifertLinkData extract(const MixedPolynomial& f, const MixedPolynomial& g, std::int64_t p, std::int64_t q);

// Branch constants of a convenient holomorphic polynomial homogeneous for the
// (q, p) action. Zero or constant input has no branches.
std::vector<std::complex<double>> branch_constants(const MixedPolynomial& h, std::int64_t p, std::int64_t q);

// (p, q) read off the radial weight (q, p) of f. Throws DomainError.
std::pair<std::int64_t, std::int64_t> infer_branch_weights(const MixedPolynomial& f);

LinkCounts link_counts(const SeifertLinkData& s);

struct Degrees {
  std::int64_t d_p = 0;
  std::int64_t d_r = 0;
};
Degrees degrees(const SeifertLinkData& s);

std::int64_t ell_from_links(const LinkCounts& before, const LinkCounts& after);
std::int64_t ell_from_degrees(std::int64_t d_p, std::int64_t d_r, std::int64_t p, std::int64_t q);

std::int64_t euler_characteristic_base(std::int64_t p, std::int64_t q, std::int64_t m_prime);
std::int64_t euler_characteristic_total(const SeifertLinkData& s);
// 1 - (pq(m+n) - p - q)(m - n); reported alongside, differs from the base form.
std::int64_t chi_paper_literal(const SeifertLinkData& s);

// Roots of sum_k c[k] x^k (c.back() != 0), polished by Newton steps.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c);

}  // namespace mixsing
