#include "odo/ktheory.hpp"

#include <algorithm>

#include "odo/error.hpp"

namespace odo {

CoinvariantsWithInvolution coinvariants_with_involution(const OdometerSpec& spec, std::size_t level) {
  const std::size_t n = materialized_size(spec.modulus(level), "coinvariants");
  IntMatrix relations = IntMatrix::identity(n);
  IntMatrix negation(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    relations((x + 1) % n, x) -= 1;
    negation((n - x) % n, x) = 1;
  }
  const auto group = FgAbelianGroup::from_presentation(n, relations);
  AbHom sigma(group, group, negation);
  if (!sigma.equals(AbHom::identity(group)))
    fail(Errc::InvariantViolation, "(0,1) acts nontrivially on the coinvariants at level " +
                                       std::to_string(level));
  return {group, std::move(sigma)};
}

KTheoryReport k_theory_dihedral(const OdometerSpec& spec) {
  if (spec.group() != GroupKind::Dihedral)
    fail(Errc::WrongGroupKind, "K-theory is computed for the dihedral odometer only");
  spec.require_tail("K-theory");

  for (std::size_t i = 1; i <= spec.depth(); ++i) {
    const Integer n = spec.modulus(i);
    if (n > kCoinvariantCheckLimit) break;
    const auto c = coinvariants_with_involution(spec, i);
    if (c.group != FgAbelianGroup::free(1))
      fail(Errc::InvariantViolation, "coinvariants at level " + std::to_string(i) + " are not Z");
  }

  KTheoryReport out;
  std::tie(out.m01, out.m11) = dihedral_fixed_counts(spec);
  const Integer m = out.m01 + out.m11;
  if (m < 1 || m > 2)
    fail(Errc::InvariantViolation, "fixed-point total " + m.get_str() + " is outside {1, 2}");
  out.k0 = GroupValue::of_rank1(index_supernatural(spec), FgAbelianGroup::free(m.get_ui()));
  return out;
}

std::string render_k0(const KTheoryReport& k) {
  const std::string rank1 = k.k0.rank1 ? render_rank1(*k.k0.rank1) : "0";
  return rank1 + " (+) Z^" + std::to_string(k.k0.fg.free_rank());
}

HkVerdict hk_compare(const OdometerSpec& spec, std::size_t window) {
  if (spec.group() != GroupKind::Dihedral)
    fail(Errc::WrongGroupKind, "the HK comparison needs K-theory, available for the dihedral odometer only");
  spec.require_tail("the HK comparison");
  const KTheoryReport k = k_theory_dihedral(spec);
  const HomologyReport h = odometer_homology(spec, 3, window);

  HkVerdict v;
  // H_2k = 0 for k >= 1, so the even side is H_0.
  const GroupValue& even = h.degrees.at(0);
  v.k0_vs_even.k_side = render_k0(k);
  v.k0_vs_even.h_side = even.to_string();
  v.k0_vs_even.match = iso_equal(k.k0, even);
  v.k0_vs_even.details = "K0 = " + v.k0_vs_even.k_side + " vs H0 (+) H2 (+) ... = " +
                         v.k0_vs_even.h_side;

  const GroupValue& h1 = h.degrees.at(1);
  const GroupValue& h3 = h.degrees.at(3);
  v.k1_vs_odd.k_side = render_group(k.k1);
  if (h1.is_zero() && h3.is_zero()) {
    v.k1_vs_odd.h_side = "0";
  } else {
    v.k1_vs_odd.h_side = h1.to_string() + " (+) " + h3.to_string() + " (+) ... (" + h3.to_string() +
                         " per odd degree, infinitely many)";
  }
  v.k1_vs_odd.match = k.k1.is_trivial() && h1.is_zero() && h3.is_zero();
  v.k1_vs_odd.details = "K1 = " + v.k1_vs_odd.k_side + " vs H1 (+) H3 (+) ... = " + v.k1_vs_odd.h_side;
  return v;
}

}  // namespace odo
