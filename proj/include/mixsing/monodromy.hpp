#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mixsing {

// prod_k (t^k - 1)^{e_k}; zero exponents are never stored.
class CyclicPoly {
 public:
  CyclicPoly() = default;
  explicit CyclicPoly(std::map<std::int64_t, std::int64_t> factors);
  // (t^k - 1)^e
  static CyclicPoly cyclic(std::int64_t k, std::int64_t e = 1);

  const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  // sum_k k e_k, which is the degree whenever this is a polynomial.
  std::int64_t degree() const;
  // Net multiplicity of every root of unity is nonnegative.
  bool is_polynomial() const;
  CyclicPoly pow(std::int64_t n) const;
  CyclicPoly inverse() const;
  std::string to_string() const;

  CyclicPoly& operator*=(const CyclicPoly& o);
  CyclicPoly& operator/=(const CyclicPoly& o);
  friend CyclicPoly operator*(CyclicPoly a, const CyclicPoly& b) { return a *= b; }
  friend CyclicPoly operator/(CyclicPoly a, const CyclicPoly& b) { return a /= b; }
  friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;

 private:
  std::map<std::int64_t, std::int64_t> factors_;
};

// sum_k a_k Lambda_k; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::map<std::int64_t, std::int64_t> coeffs);
  static Divisor lambda(std::int64_t k, std::int64_t a = 1);

  const std::map<std::int64_t, std::int64_t>& coeffs() const { return coeffs_; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<std::int64_t, std::int64_t> coeffs_;
};

// Lambda_a * Lambda_b = gcd(a, b) Lambda_lcm(a, b), extended bilinearly.
Divisor divisor_mul(const Divisor& a, const Divisor& b);
CyclicPoly to_cyclic(const Divisor& d);

// (t^{pqm'} - 1)^{m'} (t - 1) / ((t^{pm'} - 1)(t^{qm'} - 1)).
CyclicPoly delta1_base(std::int64_t p, std::int64_t q, std::int64_t m_prime);
CyclicPoly lemma6_step(const CyclicPoly& delta_star_prev, std::int64_t d_p);
CyclicPoly delta_star_h0(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n);
CyclicPoly theorem2_total(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n);
// (t^{d_p} - 1)^{m+n} / ((t^{p(m-n)} - 1)(t^{q(m-n)} - 1))
CyclicPoly theorem2_closed_form(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n);
// (t - 1)^{n+1}: every component of the initial fiber is preserved.
CyclicPoly delta0_h0(std::int64_t n);

// Ascending integer coefficients. Throws DomainError("not a polynomial").
std::vector<std::int64_t> expand(const CyclicPoly& c);

}  // namespace mixsing
