#include "mixsing/mixed_polynomial.hpp"

#include <algorithm>
#include <map>

#include "mixsing/error.hpp"

namespace mixsing {

namespace {

bool monomial_less(const MixedTerm& a, const MixedTerm& b) {
  if (a.nu != b.nu) return a.nu < b.nu;
  return a.mu < b.mu;
}

// Powers z^0..z^n by repeated multiplication.
std::vector<std::complex<double>> power_table(std::complex<double> z, Exponent n) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  for (Exponent k = 1; k <= n; ++k) out[k] = out[k - 1] * z;
  return out;
}

}  // namespace

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r) || r < 0) throw DomainError("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r) || r < 0) throw DomainError("exponent overflow");
  return r;
}

MixedPolynomial::MixedPolynomial(std::vector<MixedTerm> terms) {
  for (const auto& t : terms) {
    if (t.nu[0] < 0 || t.nu[1] < 0 || t.mu[0] < 0 || t.mu[1] < 0) throw DomainError("negative exponent");
  }
  std::stable_sort(terms.begin(), terms.end(), monomial_less);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().same_monomial(t)) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const MixedTerm& t) { return t.coeff.is_zero(); });
}

MixedPolynomial MixedPolynomial::constant(const GaussianRational& c) { return monomial(c, {0, 0}, {0, 0}); }

MixedPolynomial MixedPolynomial::variable(Var v) {
  switch (v) {
    case Var::z1: return monomial(1, {1, 0});
    case Var::z2: return monomial(1, {0, 1});
    case Var::zbar1: return monomial(1, {0, 0}, {1, 0});
    case Var::zbar2: return monomial(1, {0, 0}, {0, 1});
  }
  return {};
}

MixedPolynomial MixedPolynomial::monomial(const GaussianRational& c, ExponentPair nu, ExponentPair mu) {
  return MixedPolynomial(std::vector<MixedTerm>{MixedTerm{c, nu, mu}});
}

bool MixedPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].nu == ExponentPair{0, 0} && terms_[0].mu == ExponentPair{0, 0});
}

bool MixedPolynomial::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const MixedTerm& t) { return t.mu == ExponentPair{0, 0}; });
}

Exponent MixedPolynomial::max_exponent() const {
  Exponent m = 0;
  for (const auto& t : terms_) m = std::max({m, t.nu[0], t.nu[1], t.mu[0], t.mu[1]});
  return m;
}

MixedPolynomial MixedPolynomial::pow(Exponent k) const {
  if (k < 0) throw DomainError("negative exponent");
  MixedPolynomial result = constant(1);
  MixedPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MixedPolynomial& MixedPolynomial::operator+=(const MixedPolynomial& o) {
  std::vector<MixedTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = MixedPolynomial(std::move(all));
  return *this;
}

MixedPolynomial& MixedPolynomial::operator-=(const MixedPolynomial& o) { return *this += -o; }

MixedPolynomial& MixedPolynomial::operator*=(const MixedPolynomial& o) {
  std::vector<MixedTerm> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      all.push_back(MixedTerm{a.coeff * b.coeff,
                              {checked_add(a.nu[0], b.nu[0]), checked_add(a.nu[1], b.nu[1])},
                              {checked_add(a.mu[0], b.mu[0]), checked_add(a.mu[1], b.mu[1])}});
    }
  }
  *this = MixedPolynomial(std::move(all));
  return *this;
}

MixedPolynomial operator-(const MixedPolynomial& a) {
  MixedPolynomial r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MixedPolynomial add(const MixedPolynomial& p, const MixedPolynomial& q) { return p + q; }
MixedPolynomial multiply(const MixedPolynomial& p, const MixedPolynomial& q) { return p * q; }

MixedPolynomial scale(const MixedPolynomial& p, const GaussianRational& c) {
  std::vector<MixedTerm> terms = p.terms();
  for (auto& t : terms) t.coeff *= c;
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial conjugate(const MixedPolynomial& p) {
  std::vector<MixedTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(MixedTerm{t.coeff.conj(), t.mu, t.nu});
  return MixedPolynomial(std::move(terms));
}

MixedPolynomial wirtinger(const MixedPolynomial& p, Var v) {
  std::vector<MixedTerm> terms;
  for (const auto& t : p.terms()) {
    MixedTerm d = t;
    Exponent* e = nullptr;
    switch (v) {
      case Var::z1: e = &d.nu[0]; break;
      case Var::z2: e = &d.nu[1]; break;
      case Var::zbar1: e = &d.mu[0]; break;
      case Var::zbar2: e = &d.mu[1]; break;
    }
    if (*e == 0) continue;
    d.coeff *= GaussianRational(static_cast<long>(*e));
    *e -= 1;
    terms.push_back(std::move(d));
  }
  return MixedPolynomial(std::move(terms));
}

std::complex<double> evaluate(const MixedPolynomial& p, std::complex<double> z1, std::complex<double> z2) {
  if (p.is_zero()) return 0.0;
  Exponent n = p.max_exponent();
  auto a = power_table(z1, n);
  auto b = power_table(z2, n);
  auto ca = power_table(std::conj(z1), n);
  auto cb = power_table(std::conj(z2), n);
  std::complex<double> sum = 0.0;
  for (const auto& t : p.terms()) {
    sum += t.coeff.to_complex() * a[t.nu[0]] * b[t.nu[1]] * ca[t.mu[0]] * cb[t.mu[1]];
  }
  return sum;
}

std::string to_string(const MixedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string mono;
    auto factor = [&mono](const std::string& base, Exponent e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += base;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    factor("z1", t.nu[0]);
    factor("z2", t.nu[1]);
    factor("conj(z1)", t.mu[0]);
    factor("conj(z2)", t.mu[1]);

    // Pull a leading minus out of purely real or purely imaginary coefficients.
    GaussianRational c = t.coeff;
    bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative) c = -c;
    std::string coeff = c.to_string();
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (c == GaussianRational(1)) {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace mixsing
