#include <doctest.h>

#include "odo/error.hpp"
#include "odo/groupoid.hpp"
#include "odo/homology.hpp"
#include "support.hpp"

#include <numeric>

using namespace odo;
using namespace odo::testing;

namespace {

FgAbelianGroup z2_power(std::size_t r) {
  return FgAbelianGroup::from_invariants(0, std::vector<Integer>(r, Integer(2)));
}

// Orbit decomposition: H_*(Γ ⋉ X) = ⊕ over orbits of H_*(stabilizer). For Z_2
// acting by negation on Z_n a fixed point contributes H_*(Z_2) = Z, Z_2, 0,
// Z_2, ... and a free orbit contributes Z in degree 0 only.
FgAbelianGroup negation_groupoid_oracle(std::size_t n, std::size_t degree) {
  const std::size_t fixed = negation_fixed_points(n);
  const std::size_t orbits = fixed + (n - fixed) / 2;
  if (degree == 0) return FgAbelianGroup::free(orbits);
  return degree % 2 == 1 ? z2_power(fixed) : FgAbelianGroup();
}

// Random involution on {0..n-1} with a prescribed number of fixed points.
std::vector<std::size_t> random_involution(std::mt19937_64& rng, std::size_t n, std::size_t fixed) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> sigma(n);
  for (std::size_t k = 0; k < fixed; ++k) sigma[perm[k]] = perm[k];
  for (std::size_t k = fixed; k + 1 < n; k += 2) {
    sigma[perm[k]] = perm[k + 1];
    sigma[perm[k + 1]] = perm[k];
  }
  return sigma;
}

}  // namespace

TEST_CASE("involution modules") {
  CHECK(z2_homology(InvolutionModule::negation(5), 1) == z2_power(1));
  CHECK(z2_homology(InvolutionModule::negation(4), 3) == z2_power(2));
  CHECK(z2_homology(InvolutionModule({0}), 2).is_trivial());
  CHECK(z2_homology(InvolutionModule({0}), 0) == FgAbelianGroup::free(1));
  CHECK(z2_homology(InvolutionModule::negation(6), 0) == FgAbelianGroup::free(4));
  CHECK_THROWS_AS(InvolutionModule({1, 2, 0}), Error);
  CHECK_THROWS_AS(InvolutionModule({3}), Error);
}

TEST_CASE("property: odd-degree homology counts fixed points, for random involutions") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const std::size_t fixed = (n % 2) + 2 * (rng() % (n / 2 + 1));
    const InvolutionModule m(random_involution(rng, n, std::min(fixed, n)));
    CHECK(z2_homology(m, 1) == z2_power(m.fixed_point_count()));
    CHECK(z2_homology(m, 3) == z2_homology(m, 1));
    CHECK(z2_homology(m, 2) == z2_homology(m, 4));
    CHECK(z2_homology(m, 2).is_trivial());
  }
}

TEST_CASE("transfer maps") {
  SUBCASE("dihedral, even ratio") {
    const AbHom t = transfer_map(dihedral(2, 2, 4), 1, 1);
    CHECK(t.matrix() == IntMatrix{{1, 1}, {0, 0}});
  }
  SUBCASE("dihedral, odd ratio") {
    const AbHom t = transfer_map(dihedral(3, 3, 4), 2, 1);
    CHECK(t.equals(AbHom::identity(t.domain())));
  }
  SUBCASE("Z kind") {
    for (long r : {2, 3, 5}) {
      const AbHom t = transfer_map(geometric(GroupKind::Z, 2, r, 3), 1, 1);
      CHECK(t.matrix() == IntMatrix{{1}});
    }
  }
  SUBCASE("degree 0 multiplies by the index") {
    CHECK(transfer_map(dihedral(2, 3, 3), 1, 0).matrix() == IntMatrix{{3}});
    CHECK(transfer_between(dihedral(2, 3, 3), 0, 2, 0).matrix() == IntMatrix{{6}});
  }
  SUBCASE("level range") {
    try {
      (void)transfer_map(dihedral(2, 2, 3), 3, 1);
      FAIL("expected LevelOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LevelOutOfRange);
    }
  }
}

TEST_CASE("property: transfer does not depend on the transversal") {
  std::mt19937_64 rng(123);
  const std::vector<OdometerSpec> specs{dihedral(2, 2, 4), dihedral(3, 3, 4), dihedral(2, 3, 4),
                                        geometric(GroupKind::Z, 2, 3, 4)};
  for (int trial = 0; trial < 40; ++trial) {
    const auto& s = specs[rng() % specs.size()];
    const std::size_t from = rng() % 3, to = from + 1 + rng() % (3 - from);
    const Integer nf = s.modulus(from), nt = s.modulus(to);
    std::vector<GroupElement> reps;
    for (unsigned long k = 0; k < Integer(nt / nf).get_ui(); ++k) {
      const long shift = static_cast<long>(rng() % 9) - 4;
      const bool flip = s.group() != GroupKind::Z && rng() % 2;
      reps.push_back(GroupElement::make(s.group(), nf * k + nt * shift, flip));
    }
    CHECK(transfer_between(s, from, to, 1, reps).equals(transfer_between(s, from, to, 1)));
  }
}

TEST_CASE("property: transfer is transitive") {
  for (const auto& s : {dihedral(2, 2, 5), dihedral(3, 3, 5), dihedral(6, 3, 5)}) {
    for (std::size_t i = 1; i + 2 <= 5; ++i) {
      const AbHom direct = transfer_between(s, i, i + 2, 1);
      CHECK(direct.equals(compose(transfer_map(s, i + 1, 1), transfer_map(s, i, 1))));
    }
  }
}

TEST_CASE("odometer homology") {
  SUBCASE("dihedral 2^i") {
    const auto h = odometer_homology(dihedral(2, 2), 3);
    CHECK(h.degrees.at(0).to_string() == "Z[1/2]");
    CHECK(h.degrees.at(1).to_string() == "Z_2");
    CHECK(h.degrees.at(2).to_string() == "0");
    CHECK(h.degrees.at(3).to_string() == "Z_2");
  }
  SUBCASE("dihedral 3^i") {
    const auto h = odometer_homology(dihedral(3, 3), 3);
    CHECK(h.degrees.at(0).to_string() == "Z[1/3]");
    CHECK(h.degrees.at(1).to_string() == "Z_2^2");
    CHECK(h.degrees.at(3).to_string() == "Z_2^2");
  }
  SUBCASE("Z kind 2^i") {
    const auto h = odometer_homology(geometric(GroupKind::Z, 2, 2, 6), 3);
    CHECK(h.degrees.at(0).to_string() == "Z[1/2]");
    CHECK(h.degrees.at(1).to_string() == "Z");
    CHECK(h.degrees.at(2).to_string() == "0");
  }
  SUBCASE("degree bound") {
    const auto h = odometer_homology(dihedral(2, 2), 5);
    CHECK(h.degrees.size() == 6);
    CHECK(iso_equal(h.degrees.at(5), h.degrees.at(1)));
    CHECK(odometer_homology(dihedral(2, 2), 0).degrees.size() == 1);
  }
  SUBCASE("tail and kind preconditions") {
    try {
      (void)odometer_homology(explicit_chain(GroupKind::Dihedral, {2, 4}), 3);
      FAIL("expected TailRequired");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TailRequired);
    }
    CHECK_THROWS_AS(odometer_homology(geometric(GroupKind::DirectProduct, 2, 2, 4), 3), Error);
  }
}

TEST_CASE("property: H_1 = H_3 across dihedral chains") {
  const std::vector<OdometerSpec> matrix{
      dihedral(2, 2), dihedral(1, 3), dihedral(1, 5), dihedral(2, 3), dihedral(3, 2), dihedral(4, 6),
      explicit_chain(GroupKind::Dihedral, {6, 18, 54}, 3),
      explicit_chain(GroupKind::Dihedral, {3, 9, 18}, 2),
      explicit_chain(GroupKind::Dihedral, {5, 10, 30}, 5)};
  for (const auto& s : matrix) {
    const auto h = odometer_homology(s, 3);
    CHECK(iso_equal(h.degrees.at(1), h.degrees.at(3)));
  }
}

TEST_CASE("finite groupoids") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.mul(2, 2) == 1);
  CHECK(z3.inverse(1) == 2);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(FiniteGroupoid(FiniteGroup::cyclic(2), 2, {0, 1, 0, 0}), Error);

  SUBCASE("Z_2 on Z_3 by negation") {
    const auto g = FiniteGroupoid::negation(3);
    CHECK(groupoid_chain_homology(g, 0) == FgAbelianGroup::free(2));
    CHECK(groupoid_chain_homology(g, 1) == z2_power(1));
    CHECK(groupoid_chain_homology(g, 2).is_trivial());
  }
  SUBCASE("trivial group on a point") {
    const FiniteGroupoid g(FiniteGroup::cyclic(1), 1, {0});
    CHECK(groupoid_chain_homology(g, 0) == FgAbelianGroup::free(1));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(groupoid_chain_homology(g, n).is_trivial());
  }
  SUBCASE("Z_2 on Z_4 by negation") {
    const auto g = FiniteGroupoid::negation(4);
    CHECK(groupoid_chain_homology(g, 1) == z2_power(2));
    CHECK(groupoid_chain_homology(g, 3) == z2_power(2));
    CHECK(groupoid_chain_homology(g, 3) == z2_homology(InvolutionModule::negation(4), 3));
  }
  SUBCASE("Z_3 acting freely on itself") {
    std::vector<std::size_t> action(9);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t x = 0; x < 3; ++x) action[a * 3 + x] = (a + x) % 3;
    const FiniteGroupoid g(FiniteGroup::cyclic(3), 3, action);
    CHECK(groupoid_chain_homology(g, 0) == FgAbelianGroup::free(1));
    CHECK(groupoid_chain_homology(g, 1).is_trivial());
    CHECK(groupoid_chain_homology(g, 2).is_trivial());
  }
  SUBCASE("budget") {
    try {
      (void)groupoid_chain_homology(FiniteGroupoid::negation(12), 3, 100);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BudgetExceeded);
    }
  }
}

TEST_CASE("property: boundary of a boundary vanishes") {
  for (std::size_t n : {2u, 3u, 5u, 6u}) {
    const auto g = FiniteGroupoid::negation(n);
    for (std::size_t k = 1; k <= 3; ++k)
      CHECK((groupoid_boundary(g, k) * groupoid_boundary(g, k + 1)).is_zero());
  }
}

TEST_CASE("groupoid complex agrees with the orbit formula and the periodic resolution") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto g = FiniteGroupoid::negation(n);
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto h = groupoid_chain_homology(g, k);
      CHECK(h == negation_groupoid_oracle(n, k));
      if (k % 2 == 1) CHECK(h == z2_homology(InvolutionModule::negation(n), k));
    }
  }
}
