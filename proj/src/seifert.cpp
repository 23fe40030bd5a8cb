#include "mixsing/seifert.hpp"

#include <numeric>

#include <Eigen/Eigenvalues>

#include "mixsing/error.hpp"
#include "mixsing/homogeneity.hpp"

namespace mixsing {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

void require_distinct(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                      const char* what) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = (&a == &b ? i + 1 : 0); j < b.size(); ++j) {
      double scale = std::max({1.0, std::abs(a[i]), std::abs(b[j])});
      if (std::abs(a[i] - b[j]) <= kRootSeparation * scale) throw DomainError(what);
    }
  }
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + deg);

  std::vector<std::complex<double>> dc(deg);
  for (int k = 1; k <= deg; ++k) dc[k - 1] = static_cast<double>(k) * c[k];
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> d = horner(dc, r);
      if (std::abs(d) == 0.0) break;
      std::complex<double> step = horner(c, r) / d;
      if (!std::isfinite(std::abs(step))) break;
      r -= step;
    }
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

namespace {

using ExactPoly = std::vector<GaussianRational>;  // ascending

void trim(ExactPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

ExactPoly remainder(ExactPoly a, const ExactPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const GaussianRational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Degree of gcd(a, b) over Q(i); both inputs nonzero.
std::size_t gcd_degree(ExactPoly a, ExactPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ExactPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

// Coefficients c_k of h = z2^{qm} sum_k c_k x^k, x = z1^p / z2^q; empty for zero or constant h.
ExactPoly branch_polynomial(const MixedPolynomial& h, std::int64_t p, std::int64_t q) {
  if (!h.is_holomorphic()) throw DomainError("polynomial is not holomorphic");
  if (h.is_zero() || h.is_constant()) return {};
  const MixedTerm& first = h.terms().front();
  const std::int64_t degree = q * first.nu[0] + p * first.nu[1];
  if (degree % (p * q) != 0) throw DomainError("degree is not a multiple of pq for weights (q, p)");
  const std::int64_t m = degree / (p * q);
  ExactPoly coeff(static_cast<std::size_t>(m) + 1);
  for (const auto& t : h.terms()) {
    if (q * t.nu[0] + p * t.nu[1] != degree) throw DomainError("not weighted homogeneous for weights (q, p)");
    coeff[static_cast<std::size_t>(t.nu[0] / p)] = t.coeff;
  }
  if (coeff.front().is_zero() || coeff.back().is_zero()) throw DomainError("monomial factor present (not convenient)");
  return coeff;
}

}  // namespace

std::vector<std::complex<double>> branch_constants(const MixedPolynomial& h, std::int64_t p, std::int64_t q) {
  const ExactPoly exact = branch_polynomial(h, p, q);
  if (exact.empty()) return {};
  ExactPoly derivative;
  for (std::size_t k = 1; k < exact.size(); ++k) derivative.push_back(exact[k] * GaussianRational(static_cast<long>(k)));
  if (gcd_degree(exact, derivative) > 0) throw DomainError("repeated branch (polynomial is not reduced)");
  std::vector<std::complex<double>> coeff;
  for (const auto& c : exact) coeff.push_back(c.to_complex());
  // Each root x_j is -alpha_j.
  auto roots = polynomial_roots(coeff);
  for (auto& r : roots) r = -r;
  require_distinct(roots, roots, "repeated branch (polynomial is not reduced)");
  return roots;
}

SeifertLinkData extract(const MixedPolynomial& f, const MixedPolynomial& g, std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw DomainError("weights p, q must be coprime positive integers");
  if (f.is_zero() || f.is_constant()) throw DomainError("f must be nonconstant");
  SeifertLinkData s;
  s.p = p;
  s.q = q;
  s.alphas = branch_constants(f, p, q);
  s.betas = branch_constants(g, p, q);
  s.m = static_cast<std::int64_t>(s.alphas.size());
  s.n = static_cast<std::int64_t>(s.betas.size());
  if (s.m <= s.n) throw DomainError("need more branches in f than in g (m > n)");
  if (s.n > 0 && gcd_degree(branch_polynomial(f, p, q), branch_polynomial(g, p, q)) > 0) {
    throw DomainError("f and g share a branch");
  }
  require_distinct(s.alphas, s.betas, "f and g share a branch");
  return s;
}

std::pair<std::int64_t, std::int64_t> infer_branch_weights(const MixedPolynomial& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("f must be nonconstant");
  if (!f.is_holomorphic()) throw DomainError("f is not holomorphic");
  auto radial = detect_radial(f);
  if (!radial) throw DomainError("f is not weighted homogeneous");
  if (radial->ambiguous) throw DomainError("f has a single monomial (not convenient)");
  return {radial->weight[1], radial->weight[0]};
}

LinkCounts link_counts(const SeifertLinkData& s) { return {s.m, s.n}; }

Degrees degrees(const SeifertLinkData& s) { return {s.p * s.q * (s.m - s.n), s.p * s.q * (s.m + s.n)}; }

std::int64_t ell_from_links(const LinkCounts& before, const LinkCounts& after) {
  const std::int64_t lost_pos = before.positive - after.positive;
  const std::int64_t lost_neg = before.negative - after.negative;
  if (lost_pos != lost_neg || lost_pos < 0) throw DomainError("inconsistent link pair");
  return lost_pos;
}

std::int64_t ell_from_degrees(std::int64_t d_p, std::int64_t d_r, std::int64_t p, std::int64_t q) {
  const std::int64_t diff = d_r - d_p;
  if (diff < 0 || diff % (2 * p * q) != 0) throw DomainError("d_r - d_p is not a nonnegative multiple of 2pq");
  return diff / (2 * p * q);
}

std::int64_t euler_characteristic_base(std::int64_t p, std::int64_t q, std::int64_t m_prime) {
  return 1 - (p * m_prime - 1) * (q * m_prime - 1);
}

std::int64_t euler_characteristic_total(const SeifertLinkData& s) {
  return euler_characteristic_base(s.p, s.q, s.m - s.n) - 2 * s.n * degrees(s).d_p;
}

std::int64_t chi_paper_literal(const SeifertLinkData& s) {
  return 1 - (s.p * s.q * (s.m + s.n) - s.p - s.q) * (s.m - s.n);
}

}  // namespace mixsing
