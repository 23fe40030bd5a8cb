#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mixsing/gaussian_rational.hpp"

namespace mixsing {

using Exponent = std::int64_t;
using ExponentPair = std::array<Exponent, 2>;

enum class Var { z1, z2, zbar1, zbar2 };

// c * z1^nu[0] * z2^nu[1] * conj(z1)^mu[0] * conj(z2)^mu[1]
struct MixedTerm {
  GaussianRational coeff;
  ExponentPair nu{0, 0};
  ExponentPair mu{0, 0};

  bool same_monomial(const MixedTerm& o) const { return nu == o.nu && mu == o.mu; }
  friend bool operator==(const MixedTerm&, const MixedTerm&) = default;
};

// Canonical sum of MixedTerms: sorted by (nu, mu), merged, zeros dropped.
class MixedPolynomial {
 public:
  MixedPolynomial() = default;
  explicit MixedPolynomial(std::vector<MixedTerm> terms);

  static MixedPolynomial constant(const GaussianRational& c);
  static MixedPolynomial variable(Var v);
  static MixedPolynomial monomial(const GaussianRational& c, ExponentPair nu, ExponentPair mu = {0, 0});

  const std::vector<MixedTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_holomorphic() const;
  // Zero when the polynomial is zero.
  Exponent max_exponent() const;

  MixedPolynomial pow(Exponent k) const;

  MixedPolynomial& operator+=(const MixedPolynomial& o);
  MixedPolynomial& operator-=(const MixedPolynomial& o);
  MixedPolynomial& operator*=(const MixedPolynomial& o);

  friend MixedPolynomial operator+(MixedPolynomial a, const MixedPolynomial& b) { return a += b; }
  friend MixedPolynomial operator-(MixedPolynomial a, const MixedPolynomial& b) { return a -= b; }
  friend MixedPolynomial operator*(MixedPolynomial a, const MixedPolynomial& b) { return a *= b; }
  friend MixedPolynomial operator-(const MixedPolynomial& a);
  friend bool operator==(const MixedPolynomial&, const MixedPolynomial&) = default;

 private:
  std::vector<MixedTerm> terms_;
};

MixedPolynomial add(const MixedPolynomial& p, const MixedPolynomial& q);
MixedPolynomial multiply(const MixedPolynomial& p, const MixedPolynomial& q);
MixedPolynomial scale(const MixedPolynomial& p, const GaussianRational& c);

// Swaps nu and mu and conjugates every coefficient.
MixedPolynomial conjugate(const MixedPolynomial& p);

// Formal partial derivative with z and conj(z) independent.
MixedPolynomial wirtinger(const MixedPolynomial& p, Var v);

std::complex<double> evaluate(const MixedPolynomial& p, std::complex<double> z1, std::complex<double> z2);

// Grammar: z1, z2, conj(expr), + - * / ^, integer/decimal literals, i, parentheses.
// '/' only divides by a nonzero constant. Throws ParseError.
MixedPolynomial parse(std::string_view text);
std::string to_string(const MixedPolynomial& p);

// Adds exponents, throwing DomainError past 63 bits.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

}  // namespace mixsing
