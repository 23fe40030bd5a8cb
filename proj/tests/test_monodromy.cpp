#include <doctest.h>

#include <numeric>
#include <random>

#include "mixsing/error.hpp"
#include "mixsing/monodromy.hpp"
#include "mixsing/seifert.hpp"
#include "support/oracles.hpp"

using namespace mixsing;
using testing::IntPoly;

namespace {

CyclicPoly cyc(std::int64_t k, std::int64_t e = 1) { return CyclicPoly::cyclic(k, e); }
Divisor lam(std::int64_t k, std::int64_t a = 1) { return Divisor::lambda(k, a); }

SeifertLinkData data(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  SeifertLinkData s;
  s.p = p;
  s.q = q;
  s.m = m;
  s.n = n;
  return s;
}

}  // namespace

TEST_CASE("divisor products") {
  CHECK(divisor_mul(lam(2), lam(2)) == lam(2, 2));
  CHECK(divisor_mul(lam(2), lam(3)) == lam(6));
  CHECK(divisor_mul(lam(4), lam(6)) == lam(12, 2));
  Divisor prod = divisor_mul(lam(2) - lam(1), lam(3) - lam(1));
  CHECK(prod == lam(6) - lam(2) - lam(3) + lam(1));
  // Same divisor as t^2 - t + 1.
  CHECK(expand(to_cyclic(prod)) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(divisor_mul(lam(1), lam(7, 3)) == lam(7, 3));
  CHECK((lam(5) - lam(5)).coeffs().empty());
  CHECK_THROWS_AS(lam(0), DomainError);
}

TEST_CASE("property: divisor algebra is commutative and associative") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> idx(1, 60), coef(-3, 3), len(1, 4);
  auto random_divisor = [&] {
    Divisor d;
    for (int k = len(rng); k > 0; --k) d += lam(idx(rng), coef(rng) == 0 ? 1 : coef(rng));
    return d;
  };
  for (int k = 0; k < 200; ++k) {
    Divisor a = random_divisor(), b = random_divisor(), c = random_divisor();
    CHECK(divisor_mul(a, b) == divisor_mul(b, a));
    CHECK(divisor_mul(divisor_mul(a, b), c) == divisor_mul(a, divisor_mul(b, c)));
    CHECK(divisor_mul(a, b + c) == divisor_mul(a, b) + divisor_mul(a, c));
  }
}

TEST_CASE("cyclic polynomial algebra") {
  CyclicPoly c = cyc(2, 2) * cyc(3) / cyc(2);
  CHECK(c == CyclicPoly(std::map<std::int64_t, std::int64_t>{{2, 1}, {3, 1}}));
  CHECK((c / c).is_one());
  CHECK(c.inverse() * c == CyclicPoly());
  CHECK(cyc(2).pow(3) == cyc(2, 3));
  CHECK(cyc(6).degree() == 6);
  CHECK(cyc(2, 2).to_string() == "(t^2-1)^2");
  CHECK(cyc(1).to_string() == "(t-1)");
  CHECK(CyclicPoly().to_string() == "1");
  CHECK((cyc(6) / (cyc(2) * cyc(3))).is_polynomial() == false);
  CHECK((cyc(6) * cyc(1) / (cyc(2) * cyc(3))).is_polynomial());
  CHECK_FALSE(cyc(1, -1).is_polynomial());
  CHECK_FALSE((cyc(4) / cyc(3)).is_polynomial());
}

TEST_CASE("delta1_base examples") {
  CHECK(delta1_base(2, 3, 1) == cyc(6) * cyc(1) / (cyc(2) * cyc(3)));
  CHECK(expand(delta1_base(2, 3, 1)) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(delta1_base(1, 1, 2) == cyc(1));
  CHECK(expand(delta1_base(1, 1, 2)) == std::vector<std::int64_t>{-1, 1});
  CHECK(delta1_base(1, 2, 2) == cyc(4) * cyc(1) / cyc(2));
  CHECK(expand(delta1_base(1, 2, 2)) == std::vector<std::int64_t>{-1, 1, -1, 1});
  CHECK(delta1_base(1, 1, 1).is_one());
  CHECK_THROWS_AS(delta1_base(2, 4, 1), DomainError);
  CHECK_THROWS_AS(delta1_base(2, 3, 0), DomainError);
}

TEST_CASE("delta1_base degree equals 1 - chi of the base fiber") {
  for (std::int64_t p = 1; p <= 6; ++p)
    for (std::int64_t q = 1; q <= 6; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t mp = 1; mp <= 5; ++mp) {
        auto c = delta1_base(p, q, mp);
        REQUIRE(c.is_polynomial());
        CHECK(c.degree() == 1 - euler_characteristic_base(p, q, mp));
        auto coeffs = expand(c);
        CHECK(static_cast<std::int64_t>(coeffs.size()) - 1 == c.degree());
      }
    }
}

TEST_CASE("lemma6_step examples") {
  CHECK(lemma6_step(CyclicPoly(), 2) == cyc(2, 2));
  CHECK(lemma6_step(cyc(1, -1) * cyc(3), 3) == cyc(1, -1) * cyc(3, 3));
  CHECK_THROWS_AS(lemma6_step(CyclicPoly(), 0), DomainError);
}

TEST_CASE("delta_star_h0 examples") {
  CHECK(delta_star_h0(1, 1, 3, 1).is_one());
  CHECK(delta_star_h0(2, 3, 1, 0) == cyc(6) / (cyc(2) * cyc(3)));
  CHECK(delta_star_h0(1, 1, 2, 1) == cyc(1, -1));
  CHECK(delta0_h0(1) == cyc(1, 2));
  CHECK(delta0_h0(0) == cyc(1));
  CHECK_THROWS_AS(delta_star_h0(1, 1, 2, 2), DomainError);
}

TEST_CASE("theorem2_total examples") {
  CHECK(theorem2_total(1, 1, 3, 1) == cyc(2, 2));
  CHECK(theorem2_closed_form(1, 1, 3, 1) == cyc(2, 4) / (cyc(2) * cyc(2)));
  CHECK(theorem2_total(2, 3, 1, 0) == cyc(6) / (cyc(2) * cyc(3)));
  CHECK(theorem2_total(1, 1, 2, 1) == cyc(1));
  CHECK(theorem2_closed_form(1, 1, 2, 1) == cyc(1));
  CHECK((theorem2_total(1, 1, 2, 1) * cyc(1)).degree() == 1 - euler_characteristic_total(data(1, 1, 2, 1)));
  CHECK(expand(theorem2_total(1, 1, 4, 2) * cyc(1)).size() == 10);
}

TEST_CASE("expand examples") {
  CHECK(expand(cyc(2, 2)) == std::vector<std::int64_t>{1, 0, -2, 0, 1});
  CHECK(expand(cyc(6) * cyc(1) / (cyc(2) * cyc(3))) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(expand(CyclicPoly()) == std::vector<std::int64_t>{1});
  CHECK_THROWS_WITH_AS(expand(cyc(1, -1)), doctest::Contains("not a polynomial"), DomainError);
  CHECK_THROWS_AS(expand(cyc(6) / (cyc(2) * cyc(3))), DomainError);
}

TEST_CASE("property: expand agrees with integer long division") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> k(1, 12), e(0, 3), len(1, 4);
  int tested = 0;
  for (int trial = 0; trial < 400; ++trial) {
    CyclicPoly num, den;
    for (int j = len(rng); j > 0; --j) num *= cyc(k(rng), e(rng) + 1);
    for (int j = len(rng) - 1; j > 0; --j) den *= cyc(k(rng), e(rng));
    CyclicPoly c = num / den;
    auto oracle = testing::long_division_expand(c);
    if (c.is_polynomial()) {
      REQUIRE(oracle);
      CHECK(expand(c) == *oracle);
      ++tested;
    } else {
      CHECK_FALSE(oracle);
      CHECK_THROWS_AS(expand(c), DomainError);
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("property: base-case oracle for pq <= 60") {
  for (int p = 1; p <= 60; ++p)
    for (int q = 1; p * q <= 60; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto coeffs = expand(delta1_base(p, q, 1));
      auto exact = testing::long_division_expand(delta1_base(p, q, 1));
      REQUIRE(exact);
      CHECK(coeffs == *exact);
      auto approx = testing::brieskorn_eigen_product(p, q);
      REQUIRE(approx.size() == coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        CHECK(std::abs(approx[i] - static_cast<double>(coeffs[i])) < 1e-6);
    }
}

TEST_CASE("property: stepwise product, closed form and degree law") {
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t q = 1; q < p || (p == 1 && q == 1); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t n = 0; n < m; ++n) {
          std::int64_t d_p = p * q * (m - n);
          CyclicPoly iterated = delta_star_h0(p, q, m, n);
          for (std::int64_t i = 0; i < n; ++i) iterated = lemma6_step(iterated, d_p);
          CHECK(iterated == theorem2_total(p, q, m, n));
          CHECK(iterated == theorem2_closed_form(p, q, m, n));
          CyclicPoly delta1 = iterated * cyc(1);
          REQUIRE(delta1.is_polynomial());
          CHECK(delta1.degree() == 1 - euler_characteristic_total(data(p, q, m, n)));
        }
    }
}
