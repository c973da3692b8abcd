#include <doctest.h>

#include "odo/colimit.hpp"
#include "odo/error.hpp"
#include "odo/group_value.hpp"
#include "support.hpp"

using namespace odo;

TEST_CASE("factorization") {
  CHECK(factorize(1).empty());
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned long>{2, 3});
  CHECK(f[1] == std::pair<Integer, unsigned long>{3, 2});
  CHECK(f[2] == std::pair<Integer, unsigned long>{5, 1});
  // Two primes past the trial-division range.
  const Integer p("1000000007"), q("998244353");
  const auto g = factorize(p * q);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == q);
  CHECK(g[1].first == p);
}

TEST_CASE("supernatural numbers") {
  auto s = SupernaturalNumber::from_integer(12);
  CHECK(s.to_string() == "2^2 * 3");
  s.make_infinite(2);
  CHECK(s.to_string() == "2^inf * 3");
  CHECK(s.has_finite_part());
  CHECK(SupernaturalNumber::parse("2^inf * 3") == s);
  CHECK(SupernaturalNumber::parse("1").is_one());
  CHECK(SupernaturalNumber().to_string() == "1");
  CHECK(supernatural_iso_equal(s, SupernaturalNumber::infinite_support_of(2)));
  CHECK_FALSE(supernatural_iso_equal(s, SupernaturalNumber::infinite_support_of(6)));
  CHECK_THROWS_AS(SupernaturalNumber::parse("2^^"), Error);
}

TEST_CASE("property: supernatural round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    SupernaturalNumber s = SupernaturalNumber::from_integer(1 + rng() % 5000);
    if (rng() % 2) s.make_infinite(Integer(std::vector<long>{2, 3, 5, 7}[rng() % 4]));
    CHECK(SupernaturalNumber::parse(s.to_string()) == s);
  }
}

TEST_CASE("group rendering") {
  CHECK(render_group(FgAbelianGroup()) == "0");
  CHECK(render_group(FgAbelianGroup::free(1)) == "Z");
  CHECK(render_group(FgAbelianGroup::free(3)) == "Z^3");
  CHECK(render_group(FgAbelianGroup::from_invariants(0, {2, 2})) == "Z_2^2");
  CHECK(render_group(FgAbelianGroup::from_invariants(1, {2, 4})) == "Z (+) Z_2 (+) Z_4");
  CHECK(render_rank1(SupernaturalNumber::infinite_support_of(6)) == "Z[1/6]");
  CHECK(render_rank1(SupernaturalNumber()) == "Z");
  auto s = SupernaturalNumber::from_integer(2);
  s.make_infinite(3);
  CHECK(render_rank1(s) == "{m/n_i} over 2 * 3^inf");
}

TEST_CASE("rank-1 colimits") {
  const std::vector<Integer> m{2, 2, 2};
  const auto r = colimit_rank1(m, Tail::geometric(2));
  CHECK(render_rank1(std::get<Rank1Colimit>(r).supernatural) == "Z[1/2]");
  const auto e = colimit_rank1(m, Tail::explicit_only());
  CHECK(std::get<Rank1Colimit>(e).supernatural.to_string() == "2^3");
  const std::vector<Integer> ones{1, 1};
  CHECK(std::get<Rank1Colimit>(colimit_rank1(ones, Tail::geometric(1))).supernatural.is_one());
}

namespace {

struct System {
  std::vector<FgAbelianGroup> groups;
  std::vector<AbHom> maps;
};

System constant_system(const FgAbelianGroup& g, const std::vector<IntMatrix>& steps) {
  System s;
  s.groups.assign(steps.size() + 1, g);
  for (const auto& m : steps) s.maps.emplace_back(g, g, m);
  return s;
}

}  // namespace

TEST_CASE("finite colimits") {
  const auto v = FgAbelianGroup::from_invariants(0, {2, 2});
  const IntMatrix id = IntMatrix::identity(2);
  const IntMatrix p{{1, 1}, {0, 0}};

  SUBCASE("identity maps") {
    const System s = constant_system(v, std::vector<IntMatrix>(7, id));
    const auto r = colimit_finite(s.groups, s.maps, 3);
    CHECK(std::get<FiniteColimit>(r).group == v);
    CHECK(std::get<FiniteColimit>(r).stabilization_depth == 1);
  }
  SUBCASE("rank-one projection") {
    const System s = constant_system(v, std::vector<IntMatrix>(7, p));
    CHECK(std::get<FiniteColimit>(colimit_finite(s.groups, s.maps, 3)).group ==
          FgAbelianGroup::cyclic(2));
  }
  SUBCASE("alternating") {
    const System s = constant_system(v, {id, p, id, p, id, p, id});
    CHECK(std::get<FiniteColimit>(colimit_finite(s.groups, s.maps, 3)).group ==
          FgAbelianGroup::cyclic(2));
  }
  SUBCASE("eventually identity") {
    const System s = constant_system(v, {p, p, id, id, id, id, id, id});
    const auto r = std::get<FiniteColimit>(colimit_finite(s.groups, s.maps, 3));
    CHECK(r.group == v);
    CHECK(r.stabilization_depth == 3);
  }
  SUBCASE("zero maps") {
    const System s = constant_system(v, std::vector<IntMatrix>(7, IntMatrix(2, 2)));
    CHECK(std::holds_alternative<ZeroColimit>(colimit_finite(s.groups, s.maps, 3)));
  }
}

TEST_CASE("a system that is still shrinking is reported as not stabilized") {
  // Z_64 -> Z_64 by doubling: images have order 32, 16, ... until they vanish.
  const auto g = FgAbelianGroup::cyclic(64);
  const System s = constant_system(g, std::vector<IntMatrix>(7, IntMatrix{{2}}));
  try {
    (void)colimit_finite(s.groups, s.maps, 3);
    FAIL("expected NotStabilized");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotStabilized);
  }
}

TEST_CASE("colimit input errors") {
  const auto v = FgAbelianGroup::from_invariants(0, {2, 2});
  const System s = constant_system(v, std::vector<IntMatrix>(2, IntMatrix::identity(2)));
  CHECK_THROWS_AS(colimit_finite(s.groups, s.maps, 3), Error);
  CHECK_THROWS_AS(colimit_rank1(std::vector<Integer>{}, Tail::explicit_only()), Error);
}
