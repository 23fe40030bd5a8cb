#include "mixsing/monodromy.hpp"

#include <numeric>
#include <set>

#include "mixsing/error.hpp"

namespace mixsing {

namespace {

void drop_zeros(std::map<std::int64_t, std::int64_t>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

void validate_weights(std::int64_t p, std::int64_t q, std::int64_t m_prime) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw DomainError("weights p, q must be coprime positive integers");
  if (m_prime < 1) throw DomainError("branch count must be positive");
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("coefficient overflow");
  return r;
}

}  // namespace

CyclicPoly::CyclicPoly(std::map<std::int64_t, std::int64_t> factors) : factors_(std::move(factors)) {
  for (const auto& [k, e] : factors_) {
    if (k < 1) throw DomainError("cyclic factor index must be positive");
  }
  drop_zeros(factors_);
}

CyclicPoly CyclicPoly::cyclic(std::int64_t k, std::int64_t e) {
  return CyclicPoly(std::map<std::int64_t, std::int64_t>{{k, e}});
}

std::int64_t CyclicPoly::degree() const {
  std::int64_t d = 0;
  for (const auto& [k, e] : factors_) d += k * e;
  return d;
}

bool CyclicPoly::is_polynomial() const {
  std::set<std::int64_t> divisors;
  for (const auto& [k, e] : factors_) {
    for (std::int64_t d = 1; d * d <= k; ++d) {
      if (k % d == 0) {
        divisors.insert(d);
        divisors.insert(k / d);
      }
    }
  }
  // (t^k - 1) contains the d-th cyclotomic factor exactly when d | k.
  for (std::int64_t d : divisors) {
    std::int64_t mult = 0;
    for (const auto& [k, e] : factors_) {
      if (k % d == 0) mult += e;
    }
    if (mult < 0) return false;
  }
  return true;
}

CyclicPoly CyclicPoly::pow(std::int64_t n) const {
  auto f = factors_;
  for (auto& [k, e] : f) e *= n;
  return CyclicPoly(std::move(f));
}

CyclicPoly CyclicPoly::inverse() const { return pow(-1); }

CyclicPoly& CyclicPoly::operator*=(const CyclicPoly& o) {
  for (const auto& [k, e] : o.factors_) factors_[k] += e;
  drop_zeros(factors_);
  return *this;
}

CyclicPoly& CyclicPoly::operator/=(const CyclicPoly& o) { return *this *= o.inverse(); }

std::string CyclicPoly::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : factors_) {
    if (!out.empty()) out += "*";
    out += k == 1 ? "(t-1)" : "(t^" + std::to_string(k) + "-1)";
    if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out;
}

Divisor::Divisor(std::map<std::int64_t, std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& [k, a] : coeffs_) {
    if (k < 1) throw DomainError("divisor index must be positive");
  }
  drop_zeros(coeffs_);
}

Divisor Divisor::lambda(std::int64_t k, std::int64_t a) {
  return Divisor(std::map<std::int64_t, std::int64_t>{{k, a}});
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [k, a] : o.coeffs_) coeffs_[k] += a;
  drop_zeros(coeffs_);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [k, a] : o.coeffs_) coeffs_[k] -= a;
  drop_zeros(coeffs_);
  return *this;
}

Divisor divisor_mul(const Divisor& a, const Divisor& b) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [i, x] : a.coeffs()) {
    for (const auto& [j, y] : b.coeffs()) out[std::lcm(i, j)] += std::gcd(i, j) * x * y;
  }
  return Divisor(std::move(out));
}

CyclicPoly to_cyclic(const Divisor& d) { return CyclicPoly(d.coeffs()); }

CyclicPoly delta1_base(std::int64_t p, std::int64_t q, std::int64_t m_prime) {
  validate_weights(p, q, m_prime);
  Divisor one = Divisor::lambda(1);
  return to_cyclic(divisor_mul(Divisor::lambda(p * m_prime) - one, Divisor::lambda(q * m_prime) - one));
}

CyclicPoly lemma6_step(const CyclicPoly& delta_star_prev, std::int64_t d_p) {
  if (d_p < 1) throw DomainError("polar degree must be positive");
  return delta_star_prev * CyclicPoly::cyclic(d_p, 2);
}

CyclicPoly delta_star_h0(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  if (n < 0 || m <= n) throw DomainError("need m > n >= 0");
  return delta1_base(p, q, m - n) / CyclicPoly::cyclic(1);
}

CyclicPoly theorem2_total(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  return delta_star_h0(p, q, m, n) * CyclicPoly::cyclic(p * q * (m - n), 2 * n);
}

CyclicPoly theorem2_closed_form(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  validate_weights(p, q, m - n);
  if (n < 0) throw DomainError("need m > n >= 0");
  return CyclicPoly::cyclic(p * q * (m - n), m + n) / CyclicPoly::cyclic(p * (m - n)) /
         CyclicPoly::cyclic(q * (m - n));
}

CyclicPoly delta0_h0(std::int64_t n) { return CyclicPoly::cyclic(1, n + 1); }

std::vector<std::int64_t> expand(const CyclicPoly& c) {
  if (!c.is_polynomial()) throw DomainError("not a polynomial");
  const std::int64_t degree = c.degree();
  // Power series in t of prod (1 - t^k)^{e_k}, truncated at the degree, then
  // the sign (-1)^{sum e_k} from t^k - 1 = -(1 - t^k).
  std::vector<std::int64_t> s(static_cast<std::size_t>(degree) + 1, 0);
  s[0] = 1;
  std::int64_t total = 0;
  for (const auto& [k, e] : c.factors()) {
    total += e;
    if (k > degree) continue;
    for (std::int64_t rep = 0; rep < (e < 0 ? -e : e); ++rep) {
      if (e > 0) {
        for (std::int64_t i = degree; i >= k; --i) s[i] = add_checked(s[i], -s[i - k]);
      } else {
        for (std::int64_t i = k; i <= degree; ++i) s[i] = add_checked(s[i], s[i - k]);
      }
    }
  }
  if (total % 2 != 0) {
    for (auto& x : s) x = -x;
  }
  return s;
}

}  // namespace mixsing
