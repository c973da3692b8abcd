#pragma once

#include <cstddef>
#include <string>

#include "odo/abelian.hpp"
#include "odo/group_value.hpp"
#include "odo/homology.hpp"
#include "odo/odometer.hpp"

namespace odo {

/// C(X_i, Z) / (1 - shift) at level i together with the map induced by (0,1).
struct CoinvariantsWithInvolution {
  FgAbelianGroup group;
  AbHom sigma_action;
};

/// Throws InvariantViolation if the induced action is not the identity.
CoinvariantsWithInvolution coinvariants_with_involution(const OdometerSpec& spec, std::size_t level);

struct KTheoryReport {
  GroupValue k0;
  FgAbelianGroup k1;
  Integer m01 = 0;  // fixed points of (0,1)
  Integer m11 = 0;  // fixed points of (1,1)
};

/// Per-level coinvariant check for levels with at most this many cosets.
inline constexpr std::size_t kCoinvariantCheckLimit = 512;

KTheoryReport k_theory_dihedral(const OdometerSpec& spec);

/// "<rank-1 part> (+) Z^m", e.g. "Z[1/2] (+) Z^1".
std::string render_k0(const KTheoryReport& k);

struct HkSide {
  bool match = false;
  std::string k_side;
  std::string h_side;
  std::string details;
};

struct HkVerdict {
  HkSide k0_vs_even;
  HkSide k1_vs_odd;
};

/// Compares K_0 with ⊕ H_2k and K_1 with ⊕ H_2k+1 for a dihedral odometer.
HkVerdict hk_compare(const OdometerSpec& spec, std::size_t window = 3);

}  // namespace odo
