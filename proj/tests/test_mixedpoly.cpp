#include <doctest.h>

#include <map>
#include <random>

#include "mixsing/error.hpp"
#include "mixsing/mixed_polynomial.hpp"

using namespace mixsing;

namespace {

using Key = std::array<Exponent, 4>;

// Term-by-term product over an ordered map, independent of MixedPolynomial::operator*.
std::map<Key, GaussianRational> naive_product(const MixedPolynomial& a, const MixedPolynomial& b) {
  std::map<Key, GaussianRational> out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Key k{s.nu[0] + t.nu[0], s.nu[1] + t.nu[1], s.mu[0] + t.mu[0], s.mu[1] + t.mu[1]};
      out[k] += s.coeff * t.coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<Key, GaussianRational> as_map(const MixedPolynomial& p) {
  std::map<Key, GaussianRational> out;
  for (const auto& t : p.terms()) out[{t.nu[0], t.nu[1], t.mu[0], t.mu[1]}] = t.coeff;
  return out;
}

MixedPolynomial random_poly(std::mt19937_64& rng, int max_terms = 12, int max_exp = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp), num(-9, 9), den(1, 5), pick(0, 3);
  std::vector<MixedTerm> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    GaussianRational c(mpq_class(num(rng), den(rng)), pick(rng) == 0 ? mpq_class(0) : mpq_class(num(rng), den(rng)));
    terms.push_back({c, {ex(rng), ex(rng)}, {ex(rng), ex(rng)}});
  }
  return MixedPolynomial(std::move(terms));
}

// Exact value at a Gaussian-rational point.
GaussianRational exact_eval(const MixedPolynomial& p, const GaussianRational& z1, const GaussianRational& z2) {
  GaussianRational sum;
  for (const auto& t : p.terms()) {
    GaussianRational v = t.coeff;
    for (Exponent k = 0; k < t.nu[0]; ++k) v *= z1;
    for (Exponent k = 0; k < t.nu[1]; ++k) v *= z2;
    for (Exponent k = 0; k < t.mu[0]; ++k) v *= z1.conj();
    for (Exponent k = 0; k < t.mu[1]; ++k) v *= z2.conj();
    sum += v;
  }
  return sum;
}

const std::complex<double> I(0, 1);

}  // namespace

TEST_CASE("parse single mixed monomial") {
  MixedPolynomial p = parse("z1*conj(z2)");
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].coeff == GaussianRational(1));
  CHECK(p.terms()[0].nu == ExponentPair{1, 0});
  CHECK(p.terms()[0].mu == ExponentPair{0, 1});
}

TEST_CASE("parse holomorphic sum") {
  MixedPolynomial p = parse("z1^3 + z2^3");
  REQUIRE(p.size() == 2);
  CHECK(p.is_holomorphic());
  CHECK(p.terms()[0].nu == ExponentPair{0, 3});
  CHECK(p.terms()[1].nu == ExponentPair{3, 0});
}

TEST_CASE("parse product with conjugate matches hand expansion and naive oracle") {
  MixedPolynomial p = parse("(z1^3+z2^3)*conj(z1+2*z2)");
  MixedPolynomial by_hand({{1, {3, 0}, {1, 0}}, {2, {3, 0}, {0, 1}}, {1, {0, 3}, {1, 0}}, {2, {0, 3}, {0, 1}}});
  CHECK(p == by_hand);
  CHECK(p.size() == 4);
  CHECK(as_map(p) == naive_product(parse("z1^3+z2^3"), parse("conj(z1)+2*conj(z2)")));
}

TEST_CASE("literals: rationals, decimals, imaginary unit") {
  CHECK(parse("3/4*z1") == MixedPolynomial::monomial(GaussianRational(mpq_class(3, 4)), {1, 0}));
  CHECK(parse("0.05") == MixedPolynomial::constant(GaussianRational(mpq_class(1, 20))));
  CHECK(parse("2+3*i") == MixedPolynomial::constant(GaussianRational(2, 3)));
  CHECK(parse("conj(2+3*i)") == MixedPolynomial::constant(GaussianRational(2, -3)));
  CHECK(parse("z1/2") == MixedPolynomial::monomial(GaussianRational(mpq_class(1, 2)), {1, 0}));
  CHECK(parse("  z1 -  z1 ").is_zero());
  CHECK(parse("(z1+z2)^2") == parse("z1^2 + 2*z1*z2 + z2^2"));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> long {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("z1 + x") == 5);
  CHECK(position_of("z3") == 0);
  CHECK(position_of("z1^-2") == 3);
  CHECK(position_of("z1 +") == 4);
  CHECK(position_of("(z1") == 3);
  CHECK(position_of("z1 z2") == 3);
  CHECK(position_of("") == 0);
  CHECK(position_of("z1/z2") >= 0);
  CHECK_THROWS_WITH_AS(parse("z1^-1"), doctest::Contains("negative exponent"), ParseError);
  CHECK_THROWS_WITH_AS(parse("y"), doctest::Contains("unknown variable"), ParseError);
}

TEST_CASE("exponent overflow is an error") {
  CHECK_THROWS_AS(parse("z1^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse("z1^4611686018427387904 * z1^4611686018427387904"), DomainError);
  CHECK_NOTHROW(parse("z1^4611686018427387903"));
}

TEST_CASE("printing") {
  CHECK(to_string(MixedPolynomial()) == "0");
  CHECK(to_string(parse("z1*conj(z2)")) == "z1*conj(z2)");
  CHECK(to_string(parse("-z1 + 1/2*z2^2")) == "1/2*z2^2 - z1");
  CHECK(to_string(parse("(1-2*i)*z1*conj(z1)^3 - i")) == "-i + (1-2*i)*z1*conj(z1)^3");
  CHECK(to_string(parse("-3*i*z2")) == "-3*i*z2");
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(parse("z1")) == parse("conj(z1)"));
  CHECK(conjugate(parse("(2+i)*z1*conj(z2)")) == parse("(2-i)*conj(z1)*z2"));
  MixedPolynomial f = parse("z1^3+z2^3"), g = parse("z1+2*z2");
  MixedPolynomial lhs = conjugate(f * conjugate(g));
  CHECK(as_map(lhs) == naive_product(conjugate(f), g));
}

TEST_CASE("wirtinger examples") {
  MixedPolynomial p = parse("z1^2*conj(z2)");
  CHECK(wirtinger(p, Var::z1) == parse("2*z1*conj(z2)"));
  CHECK(wirtinger(p, Var::zbar1).is_zero());
  CHECK(wirtinger(parse("(z1^3+z2^3)*conj(z1+2*z2)"), Var::zbar2) == parse("2*(z1^3+z2^3)"));
}

TEST_CASE("evaluate examples") {
  CHECK(std::abs(evaluate(parse("z1*conj(z2)"), I, 1.0) - I) < 1e-15);
  CHECK(std::abs(evaluate(parse("z1^3+z2^3"), 1.0, 1.0) - 2.0) < 1e-15);
  MixedPolynomial p = parse("(z1^3+z2^3)*conj(z1+2*z2)");
  std::complex<double> direct = (1.0 + std::pow(I, 3)) * std::conj(1.0 + 2.0 * I);
  CHECK(std::abs(evaluate(p, 1.0, I) - direct) < 1e-14);
  CHECK(std::abs(evaluate(p, 1.0, I) - evaluate(parse("z1^3+z2^3"), 1.0, I) * std::conj(evaluate(parse("z1+2*z2"), 1.0, I))) < 1e-14);
}

TEST_CASE("evaluate relative error against exact arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<MixedTerm> terms;
    std::uniform_int_distribution<int> ex(0, 5), c(1, 9);
    for (int k = 0; k < 50; ++k) terms.push_back({GaussianRational(c(rng), c(rng)), {ex(rng), ex(rng)}, {ex(rng), ex(rng)}});
    MixedPolynomial p(std::move(terms));
    // |z| <= 10 with exactly representable dyadic coordinates.
    GaussianRational z1(mpq_class(num(rng), 256), mpq_class(num(rng), 256));
    GaussianRational z2(mpq_class(num(rng), 256), mpq_class(num(rng), 256));
    std::complex<double> got = evaluate(p, z1.to_complex(), z2.to_complex());
    std::complex<double> want = exact_eval(p, z1, z2).to_complex();
    double scale = 0;
    for (const auto& t : p.terms()) {
      scale += std::abs(t.coeff.to_complex()) * std::pow(std::abs(z1.to_complex()), t.nu[0] + t.mu[0]) *
               std::pow(std::abs(z2.to_complex()), t.nu[1] + t.mu[1]);
    }
    // Relative to the magnitude of the summands (cancellation is not an evaluation error).
    CHECK(std::abs(got - want) <= 1e-12 * scale);
  }
}

TEST_CASE("multiply, add, scale") {
  CHECK(multiply(parse("z1"), parse("conj(z1)")) == parse("z1*conj(z1)"));
  MixedPolynomial p = parse("z1^2 - (3+i)*z2*conj(z1) + 7");
  CHECK(add(p, scale(p, -1)).is_zero());
  CHECK(conjugate(p * conjugate(p)) == p * conjugate(p));
  for (const auto& t : (p * conjugate(p)).terms()) {
    if (t.nu == t.mu) CHECK(t.coeff.is_real());
  }
}

TEST_CASE("property: print/parse round trip") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    MixedPolynomial p = random_poly(rng);
    CHECK(parse(to_string(p)) == p);
  }
}

TEST_CASE("property: conjugation involution and Wirtinger compatibility") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    MixedPolynomial p = random_poly(rng);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(wirtinger(conjugate(p), Var::zbar1) == conjugate(wirtinger(p, Var::z1)));
    CHECK(wirtinger(conjugate(p), Var::zbar2) == conjugate(wirtinger(p, Var::z2)));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 200; ++k) {
    MixedPolynomial p = random_poly(rng, 6, 4), q = random_poly(rng, 6, 4);
    std::complex<double> z1(normal(rng), normal(rng)), z2(normal(rng), normal(rng));
    std::complex<double> lhs = evaluate(p * q, z1, z2), rhs = evaluate(p, z1, z2) * evaluate(q, z1, z2);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    CHECK(std::abs(evaluate(p + q, z1, z2) - evaluate(p, z1, z2) - evaluate(q, z1, z2)) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    CHECK(as_map(p * q) == naive_product(p, q));
  }
}
