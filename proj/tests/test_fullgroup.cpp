#include <doctest.h>

#include <numeric>

#include "odo/error.hpp"
#include "odo/fullgroup.hpp"
#include "support.hpp"

using namespace odo;
using namespace odo::testing;

namespace {

GroupElement d(long t, bool s) { return GroupElement::make(GroupKind::Dihedral, t, s); }

FullGroupElement random_element(std::mt19937_64& rng, const OdometerSpec& s, std::size_t level) {
  const std::size_t n = s.modulus(level).get_ui();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<GroupElement> h;
  const bool reflect = s.group() != GroupKind::Z;
  for (std::size_t x = 0; x < n; ++x)
    h.push_back(GroupElement::make(s.group(), s.modulus(level) * (static_cast<long>(rng() % 7) - 3),
                                   reflect && rng() % 2));
  return FullGroupElement::make(s, level, std::move(h), std::move(perm));
}

AbelianClass sum(const AbelianClass& a, const AbelianClass& b, const OdometerSpec& s, std::size_t level) {
  IntVector v(a.lambda.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.lambda[k] + b.lambda[k];
  return {AbelianizationChart(s, level).reduce(v), a.odd != b.odd};
}

}  // namespace

TEST_CASE("wreath elements") {
  const auto s = dihedral(2, 2, 4);
  const auto id = FullGroupElement::identity(s, 2);
  const auto z1 = FullGroupElement::zeta(s, 2, d(4, false));
  const auto z2 = FullGroupElement::zeta(s, 2, d(8, true));

  CHECK(multiply(id, z1) == z1);
  CHECK(multiply(z1, z2) == FullGroupElement::zeta(s, 2, d(4, false) * d(8, true)));
  const auto t = FullGroupElement::eta(s, 1, {1, 0});
  CHECK(multiply(t, t) == FullGroupElement::identity(s, 1));
  CHECK(multiply(z1, z1.inverse()) == id);

  CHECK_THROWS_AS(FullGroupElement::zeta(s, 2, d(2, false)), Error);
  CHECK_THROWS_AS(FullGroupElement::eta(s, 2, {0, 0, 1, 2}), Error);
  try {
    (void)multiply(id, t);
    FAIL("expected LevelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LevelMismatch);
  }
}

TEST_CASE("property: wreath multiplication is composition of bisections") {
  std::mt19937_64 rng(8);
  for (const auto& s : {dihedral(3, 2, 3), geometric(GroupKind::Z, 4, 2, 3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t level = 1 + rng() % 2;
      const auto a = random_element(rng, s, level), b = random_element(rng, s, level);
      const auto ab = multiply(a, b);
      for (std::size_t x = 0; x < a.size(); ++x) {
        CHECK(ab.perm()[x] == a.perm()[b.perm()[x]]);
        CHECK(ab.arrow(x) == a.arrow(b.perm()[x]) * b.arrow(x));
        // The arrow over x really moves coset x to perm(x).
        CHECK(coset_action(s, level, a.arrow(x), Integer(static_cast<unsigned long>(x))) == static_cast<unsigned long>(a.perm()[x]));
      }
      const auto c = random_element(rng, s, level);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, a.inverse()) == FullGroupElement::identity(s, level));
    }
  }
}

TEST_CASE("bisections") {
  const auto s = dihedral(3, 2, 3);
  SUBCASE("identity") {
    const auto u = from_bisection(s, 1, {{d(0, false), {0, 1, 2}}});
    CHECK(u == FullGroupElement::identity(s, 1));
  }
  SUBCASE("translation on all cosets") {
    const auto u = from_bisection(s, 1, {{d(1, false), {0, 1, 2}}});
    CHECK(u.perm() == std::vector<std::size_t>{1, 2, 0});
    const auto c = cocycle(s, 1, d(1, false));
    CHECK(u.h() == c.h);
  }
  SUBCASE("overlaps") {
    try {
      (void)from_bisection(s, 1, {{d(0, false), {0, 1}}, {d(1, false), {1, 2}}});
      FAIL("expected NotPartition");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotPartition);
    }
    try {
      (void)from_bisection(s, 1, {{d(0, false), {0, 1}}, {d(1, false), {2}}});  // 2 -> 0 hits 0 twice
      FAIL("expected NotPartition");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotPartition);
    }
    CHECK_THROWS_AS(from_bisection(s, 1, {{d(0, false), {0, 1}}}), Error);
  }
  SUBCASE("round trip") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_element(rng, s, 2);
      CHECK(from_bisection(s, 2, to_bisection(u)) == u);
    }
  }
}

TEST_CASE("abelianization") {
  const auto s = dihedral(2, 2, 4);
  CHECK(abelianize(s, FullGroupElement::zeta(s, 2, d(4, true))) == AbelianClass{{1, 1}, false});
  CHECK(abelianize(s, FullGroupElement::zeta(s, 2, d(8, false))) == AbelianClass{{0, 0}, false});
  CHECK(abelianize(s, FullGroupElement::eta(s, 2, {1, 0, 2, 3})) == AbelianClass{{0, 0}, true});
  CHECK(index_map_I(s, FullGroupElement::eta(s, 2, {1, 0, 2, 3})) == IntVector{0, 0});
  CHECK(index_map_I(s, FullGroupElement::identity(s, 2)) == IntVector{0, 0});
  CHECK(index_map_I(s, FullGroupElement::zeta(s, 2, d(0, true))) == IntVector{0, 1});
}

TEST_CASE("property: abelianization is a homomorphism that kills commutators") {
  std::mt19937_64 rng(31);
  for (const auto& s : {dihedral(3, 2, 3), geometric(GroupKind::Z, 3, 2, 3),
                        geometric(GroupKind::DirectProduct, 3, 2, 3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t level = 1 + rng() % 2;
      const auto a = random_element(rng, s, level), b = random_element(rng, s, level);
      CHECK(abelianize(s, multiply(a, b)) == sum(abelianize(s, a), abelianize(s, b), s, level));
      const auto comm = multiply(multiply(a, b), multiply(a.inverse(), b.inverse()));
      const auto cls = abelianize(s, comm);
      CHECK_FALSE(cls.odd);
      CHECK(AbelianizationChart(s, level).group().is_zero_element(cls.lambda));
    }
  }
}

TEST_CASE("j map") {
  const auto s = dihedral(4, 2, 3);
  const auto j = j_map(s, 1, std::pair{d(1, false), std::size_t{0}});
  CHECK(j.tau.perm() == std::vector<std::size_t>{1, 0, 2, 3});
  for (const auto& h : j.tau.h()) CHECK(h.is_identity());
  CHECK(j.cls == AbelianClass{{0, 0}, true});
  CHECK(j_map(s, 1, std::pair{d(3, true), std::size_t{2}}).cls == j.cls);
  CHECK(j_map(s, 2).cls == AbelianClass{{0, 0}, true});
  CHECK(index_map_I(s, j.tau) == IntVector{0, 0});

  try {
    (void)j_map(dihedral(2, 2, 3), 1);
    FAIL("expected LevelTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LevelTooSmall);
  }
  CHECK_THROWS_AS(j_map(s, 1, std::pair{d(0, true), std::size_t{0}}), Error);  // fixes coset 0
}

TEST_CASE("lifting to the next level") {
  const auto s = dihedral(2, 2, 4);
  const std::size_t level = 2;  // n = 4, ratio 2
  const auto lift_class = [&](const FullGroupElement& u) { return abelianize(s, lift(s, u)); };
  CHECK(lift_class(FullGroupElement::zeta(s, level, d(4, false))) == AbelianClass{{1, 0}, true});
  CHECK(lift_class(FullGroupElement::eta(s, level, {1, 0, 2, 3})) == AbelianClass{{0, 0}, false});
  CHECK(lift_class(FullGroupElement::zeta(s, level, d(0, true))) == AbelianClass{{1, 0}, false});
  const auto u = FullGroupElement::zeta(s, level, d(4, true));
  const auto up = lift(s, u);
  for (std::size_t y = 0; y < up.size(); ++y) CHECK(up.arrow(y) == u.arrow(y % 4));
}

TEST_CASE("AH certificates at finite levels") {
  SUBCASE("dihedral, n = 4") {
    const auto c = ah_certificate(dihedral(4, 2, 3), 1);
    CHECK(c.exact);
    CHECK(c.split == true);
    CHECK(c.h0_tensor_z2 == FgAbelianGroup::cyclic(2));
    CHECK(c.fullgroup_ab == FgAbelianGroup::from_invariants(0, {2, 2, 2}));
    CHECK(c.h1 == FgAbelianGroup::from_invariants(0, {2, 2}));
  }
  SUBCASE("Z kind, n = 5") {
    const auto c = ah_certificate(geometric(GroupKind::Z, 5, 2, 3), 1);
    CHECK(c.exact);
    CHECK(c.split == true);
    CHECK(c.fullgroup_ab == FgAbelianGroup::from_invariants(1, {2}));
    CHECK(c.h1 == FgAbelianGroup::free(1));
  }
  SUBCASE("too small") {
    try {
      (void)ah_certificate(dihedral(2, 2, 3), 1);
      FAIL("expected LevelTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LevelTooSmall);
    }
  }
}

TEST_CASE("property: finite-level sequences are split exact") {
  const std::vector<OdometerSpec> matrix{dihedral(3, 2, 3), dihedral(3, 3, 3), dihedral(5, 2, 3),
                                         geometric(GroupKind::Z, 3, 2, 3),
                                         geometric(GroupKind::DirectProduct, 3, 3, 3),
                                         explicit_chain(GroupKind::Dihedral, {6, 18, 54}, 3)};
  for (const auto& s : matrix)
    for (std::size_t level = 1; level <= 3; ++level) {
      const auto c = ah_certificate(s, level);
      CHECK(c.exact);
      CHECK(c.split == true);
      CHECK(c.h0_tensor_z2 == FgAbelianGroup::cyclic(2));
    }
}

TEST_CASE("AH certificates at the colimit") {
  SUBCASE("2^i") {
    const auto c = ah_certificate_colimit(dihedral(2, 2));
    CHECK(c.natural);
    CHECK(c.exact);
    CHECK(c.h0_tensor_z2.is_trivial());
    CHECK(c.h1 == FgAbelianGroup::cyclic(2));
  }
  SUBCASE("3^i") {
    const auto c = ah_certificate_colimit(dihedral(3, 3));
    CHECK(c.natural);
    CHECK(c.exact);
    CHECK(c.h0_tensor_z2 == FgAbelianGroup::cyclic(2));
    CHECK(c.h1 == FgAbelianGroup::from_invariants(0, {2, 2}));
  }
  SUBCASE("mixed chain") {
    const auto c = ah_certificate_colimit(explicit_chain(GroupKind::Dihedral, {6, 18, 54}, 3));
    CHECK(c.exact);
    CHECK(c.h0_tensor_z2 == FgAbelianGroup::cyclic(2));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(ah_certificate_colimit(explicit_chain(GroupKind::Dihedral, {3, 9})), Error);
    CHECK_THROWS_AS(ah_certificate_colimit(geometric(GroupKind::Z, 3, 3, 4)), Error);
  }
}
