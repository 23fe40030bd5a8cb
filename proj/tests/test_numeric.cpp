#include <doctest.h>

#include <numbers>
#include <random>

#include "mixsing/deform.hpp"
#include "mixsing/error.hpp"
#include "mixsing/numeric.hpp"

using namespace mixsing;
using C = std::complex<double>;

namespace {

MixedPolynomial example1_ft(const char* t) {
  return parse(std::string("(z1^3+z2^3)*conj(z1+2*z2) + ") + t + "*(z1^3*conj(z1) + z1^2 + z2^2)");
}

Point rotate(const Point& z, double theta, const std::array<std::int64_t, 2>& w) {
  return {z[0] * std::polar(1.0, w[0] * theta), z[1] * std::polar(1.0, w[1] * theta)};
}

}  // namespace

TEST_CASE("singular_residual examples") {
  MixedPolynomial z1 = parse("z1");
  double a = singular_residual(z1, {C(0.3, 0.1), C(-2, 1)});
  double b = singular_residual(z1, {C(5, 0), C(0, 0)});
  CHECK(a > 0);
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK(a == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(singular_residual(parse("z1^2"), {C(0), C(0)}) == 0.0);
  CHECK(singular_residual(parse("z1*conj(z1)"), {C(1, 1), C(0.5)}) < 1e-14);
  CHECK(singular_residual(parse("z1 + conj(z1)"), {C(1, 2), C(3)}) < 1e-14);
}

TEST_CASE("property: residual is constant along orbits") {
  MixedPolynomial ft = example1_ft("1/20");
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    Point z{C(normal(rng), normal(rng)), C(normal(rng), normal(rng))};
    double base = singular_residual(ft, z);
    CHECK(std::abs(singular_residual(ft, rotate(z, angle(rng), {1, 1})) - base) <= 1e-10);
  }
}

TEST_CASE("config validation") {
  NumericConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.seeds = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg = {};
  cfg.epsilon = -1;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg = {};
  cfg.delta = 0.1;
  cfg.delta_t = 0.2;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg = {};
  cfg.accept_tol = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  CHECK_THROWS_AS(find_fold_orbits(parse("z1*conj(z1)"), NumericConfig{}), DomainError);
}

TEST_CASE("orbit distance") {
  Point a{C(1, 0.5), C(-0.3, 2)};
  CHECK(orbit_distance(a, rotate(a, 1.234, {1, 1}), {1, 1}) < 1e-9);
  CHECK(orbit_distance(a, rotate(a, 0.7, {2, 3}), {2, 3}) < 1e-9);
  CHECK(orbit_distance(a, {C(1, 0.5), C(0.3, 2)}, {1, 1}) > 0.1);
}

TEST_CASE("fold orbits: worked example has one circle") {
  for (const char* t : {"1/100", "1/20"}) {
    auto rep = find_fold_orbits(example1_ft(t), NumericConfig{});
    CHECK(rep.verdict == FoldVerdict::count);
    CHECK(rep.orbit_count == 1);
    REQUIRE(rep.circles.size() == 1);
    CHECK(rep.circles[0].radius > 0);
    CHECK(rep.residual <= 1e-10);
    CHECK(rep.stats.seeds == 200);
    CHECK(rep.stats.converged_fraction() >= 0.2);
    CHECK(rep.morse_balance == -1);
    REQUIRE(rep.delta_t_bound);
    CHECK(*rep.delta_t_bound == rep.circles[0].radius);
    for (const auto& p : rep.representative_points()) CHECK(singular_residual(example1_ft(t), p) <= 1e-10);
  }
}

TEST_CASE("fold orbits: two negative branches give two circles") {
  auto rep = find_fold_orbits(parse("(z1^3+z2^3)*conj(z1^2+4*z2^2) + 1/20*(z1 + (2+i)*z2)"), NumericConfig{});
  CHECK(rep.verdict == FoldVerdict::count);
  CHECK(rep.orbit_count == 2);
  CHECK(rep.circles.size() == 2);
  CHECK(rep.morse_balance == -2);
  CHECK(rep.stats.converged_fraction() >= 0.2);
  auto radii = rep.radii();
  REQUIRE(radii.size() == 2);
  CHECK(radii[0] < radii[1]);
}

TEST_CASE("fold orbits: the undeformed product is inconclusive") {
  auto rep = find_fold_orbits(parse("(z1^3+z2^3)*conj(z1+2*z2)"), NumericConfig{});
  CHECK(rep.verdict == FoldVerdict::inconclusive);
  CHECK(rep.orbit_count == 0);
  CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("fold orbits are deterministic and independent of the thread count") {
  NumericConfig one;
  one.threads = 1;
  one.seeds = 60;
  NumericConfig many = one;
  many.threads = 4;
  auto a = find_fold_orbits(example1_ft("1/20"), one);
  auto b = find_fold_orbits(example1_ft("1/20"), many);
  CHECK(a.orbit_count == b.orbit_count);
  CHECK(a.stats.converged == b.stats.converged);
  REQUIRE(a.circles.size() == b.circles.size());
  for (std::size_t i = 0; i < a.circles.size(); ++i) CHECK(a.circles[i].radius == b.circles[i].radius);
}

TEST_CASE("configured radii are checked against the critical values") {
  NumericConfig cfg;
  cfg.delta = 1.0;
  cfg.delta_t = 0.5;
  auto rep = find_fold_orbits(example1_ft("1/20"), cfg);
  CHECK_FALSE(rep.radii_config_ok);
  cfg.delta_t = 1e-4;
  rep = find_fold_orbits(example1_ft("1/20"), cfg);
  CHECK(rep.radii_config_ok);
}

TEST_CASE("Morse probe: worked example fold is indefinite") {
  auto ft = example1_ft("1/20");
  auto rep = find_fold_orbits(ft, NumericConfig{});
  REQUIRE(rep.orbits.size() == 1);
  auto probe = morse_index_probe(ft, rep.orbits[0].point);
  CHECK(probe.verdict == MorseVerdict::indefinite);
  CHECK(probe.index == 1);
  CHECK(probe.eigenvalues[0] < 0);
  CHECK(probe.eigenvalues[1] > 0);
  CHECK(probe.eigenvalues[2] > 0);
  CHECK_THROWS_AS(morse_index_probe(ft, {C(0.3, 0.2), C(0.1)}), DomainError);
}

TEST_CASE("Morse probe: radial model minimum is definite") {
  // |F| = |z1|(|z1|^4 - 6|z1|^2 + 10 + |z2|^2) has a nondegenerate minimum circle in |z1|.
  auto f = parse("z1*(z1^2*conj(z1)^2 - 6*z1*conj(z1) + 10 + z2*conj(z2))");
  double rho = std::sqrt((18 + std::sqrt(124.0)) / 10);
  auto probe = morse_index_probe(f, {C(rho), C(0)});
  CHECK(probe.verdict == MorseVerdict::definite);
  CHECK(probe.index == 0);
}

TEST_CASE("Morse probe: degenerate critical circle is unresolved") {
  // Here d|F|/d|z1| has a double zero at |z1|^2 = 1.8.
  auto f = parse("z1*(z1^2*conj(z1)^2 - 6*z1*conj(z1) + 81/5 + z2*conj(z2))");
  auto probe = morse_index_probe(f, {C(std::sqrt(1.8)), C(0)});
  CHECK(probe.verdict == MorseVerdict::unresolved);
}

TEST_CASE("auto epsilon scales with the deformation") {
  double small = auto_epsilon(example1_ft("1/100"));
  double large = auto_epsilon(example1_ft("1/20"));
  CHECK(small > 0);
  CHECK(small < large);
}
