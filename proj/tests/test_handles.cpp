#include <doctest.h>

#include <numeric>

#include "mixsing/error.hpp"
#include "mixsing/handles.hpp"
#include "mixsing/monodromy.hpp"

using namespace mixsing;

namespace {

SeifertLinkData data(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t n) {
  SeifertLinkData s;
  s.p = p;
  s.q = q;
  s.m = m;
  s.n = n;
  return s;
}

std::vector<std::int64_t> chis(const HandleDecomposition& h) {
  std::vector<std::int64_t> out;
  for (const auto& st : h.stages) out.push_back(st.chi);
  return out;
}

std::vector<std::int64_t> components(const HandleDecomposition& h) {
  std::vector<std::int64_t> out;
  for (const auto& st : h.stages) out.push_back(st.components);
  return out;
}

}  // namespace

TEST_CASE("build: worked example") {
  auto h = build(data(1, 1, 3, 1));
  CHECK(h.ball_piece.id == 0);
  CHECK(h.solid_tori.size() == 1);
  REQUIRE(h.round_handles.size() == 1);
  CHECK(h.round_handles[0].d_p == 2);
  CHECK(h.round_handles[0].joins_a != h.round_handles[0].joins_b);
  CHECK(chis(h) == std::vector<std::int64_t>{0, -4});
  CHECK(components(h) == std::vector<std::int64_t>{2, 1});
  CHECK(h.stages[0].boundary_circles == 4);
  CHECK(h.stages[1].boundary_circles == 4);
  CHECK_FALSE(h.stages[0].surgery);
  REQUIRE(h.stages[1].surgery);
  CHECK(h.stages[1].surgery->disks_removed == 4);
  CHECK(h.stages[1].surgery->annuli_glued == 2);
  CHECK(check_ledger(h).empty());
  auto g = genus_report(h);
  CHECK(g.genus == 1);
  CHECK(g.boundary == 4);
}

TEST_CASE("build: trefoil has no handles") {
  auto h = build(data(2, 3, 1, 0));
  CHECK(h.solid_tori.empty());
  CHECK(h.round_handles.empty());
  CHECK(chis(h) == std::vector<std::int64_t>{-1});
  CHECK(check_ledger(h).empty());
  auto g = genus_report(h);
  CHECK(g.genus == 1);
  CHECK(g.boundary == 1);
}

TEST_CASE("build: two handles") {
  auto h = build(data(1, 1, 4, 2));
  CHECK(h.solid_tori.size() == 2);
  CHECK(h.round_handles.size() == 2);
  CHECK(chis(h) == std::vector<std::int64_t>{0, -4, -8});
  CHECK(components(h) == std::vector<std::int64_t>{3, 2, 1});
  CHECK(check_ledger(h).empty());
  CHECK((theorem2_total(1, 1, 4, 2) * CyclicPoly::cyclic(1)).degree() == 1 - h.stages.back().chi);
}

TEST_CASE("genus report: thrice-punctured sphere") {
  auto g = genus_report(build(data(1, 1, 2, 1)));
  CHECK(g.genus == 0);
  CHECK(g.boundary == 3);
}

TEST_CASE("handles follow the critical-value order") {
  auto h = build(data(1, 1, 5, 3), {0.3, 0.1, 0.2});
  REQUIRE(h.round_handles.size() == 3);
  CHECK(h.round_handles[0].joins_b == 2);
  CHECK(h.round_handles[1].joins_b == 3);
  CHECK(h.round_handles[2].joins_b == 1);
  CHECK(check_ledger(h).empty());
  auto ties = build(data(1, 1, 5, 3), {0.2, 0.2, 0.1});
  CHECK(ties.round_handles[0].joins_b == 3);
  CHECK(ties.round_handles[1].joins_b == 1);
  CHECK(ties.round_handles[2].joins_b == 2);
  CHECK_THROWS_AS(build(data(1, 1, 5, 3), {0.1}), DomainError);
}

TEST_CASE("check_ledger catches corrupted ledgers") {
  auto base = build(data(1, 1, 5, 2));

  auto self_loop = base;
  self_loop.round_handles[1].joins_a = self_loop.round_handles[1].joins_b;
  CHECK_FALSE(check_ledger(self_loop).empty());

  // Second handle joins two pieces the first one already connected.
  auto cycle = base;
  cycle.round_handles[1].joins_b = cycle.round_handles[0].joins_b;
  CHECK_FALSE(check_ledger(cycle).empty());

  auto chi = base;
  chi.stages[2].chi += 1;
  CHECK_FALSE(check_ledger(chi).empty());

  auto boundary = base;
  boundary.stages[1].boundary_circles += 2;
  CHECK_FALSE(check_ledger(boundary).empty());

  auto missing = base;
  missing.round_handles.pop_back();
  CHECK_FALSE(check_ledger(missing).empty());

  auto disconnected = base;
  disconnected.stages.back().components = 2;
  CHECK_FALSE(check_ledger(disconnected).empty());
  CHECK_THROWS_AS(genus_report(disconnected), DomainError);

  auto odd = base;
  odd.stages.back().chi += 1;
  CHECK_THROWS_AS(genus_report(odd), DomainError);
}

TEST_CASE("property: ledger invariants over the grid") {
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t q = 1; q <= 5; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t n = 0; n < m; ++n) {
          auto s = data(p, q, m, n);
          auto h = build(s);
          CHECK(check_ledger(h).empty());
          CHECK(static_cast<std::int64_t>(h.round_handles.size()) == n);
          CHECK(1 + h.solid_tori.size() - h.round_handles.size() == 1);
          CHECK(h.stages.front().components == n + 1);
          CHECK(h.stages.front().chi == euler_characteristic_base(p, q, m - n));
          CHECK(h.stages.back().chi == euler_characteristic_total(s));
          CHECK(h.stages.back().chi - h.stages.front().chi == -2 * n * p * q * (m - n));
          for (const auto& st : h.stages) CHECK(st.boundary_circles == m + n);
          for (const auto& rh : h.round_handles) CHECK(rh.joins_a != rh.joins_b);
          auto g = genus_report(h);
          CHECK(2 - 2 * g.genus - g.boundary == h.stages.back().chi);
        }
    }
}
