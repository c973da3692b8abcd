#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "odo/abelian.hpp"
#include "odo/odometer.hpp"

namespace odo {

/// Element of the topological full group of Γ ⋉ Γ/Γ_i in wreath form
/// (h, perm): h[x] ∈ Γ_i, perm a permutation of Z_{n_i}. With coset
/// representatives r_x = (x, 0) the arrow over coset x is r_{perm x} h[x] r_x^-1.
class FullGroupElement {
 public:
  /// Checks h[x] ∈ Γ_i and that perm is a permutation.
  static FullGroupElement make(const OdometerSpec& spec, std::size_t level,
                               std::vector<GroupElement> h, std::vector<std::size_t> perm);
  static FullGroupElement identity(const OdometerSpec& spec, std::size_t level);
  /// λ over the coset Γ_i, identity elsewhere.
  static FullGroupElement zeta(const OdometerSpec& spec, std::size_t level, const GroupElement& lambda);
  /// The permutation with trivial h.
  static FullGroupElement eta(const OdometerSpec& spec, std::size_t level, std::vector<std::size_t> perm);

  std::size_t level() const { return level_; }
  GroupKind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<GroupElement>& h() const { return h_; }
  const std::vector<std::size_t>& perm() const { return perm_; }

  GroupElement arrow(std::size_t x) const;
  FullGroupElement inverse() const;

  friend bool operator==(const FullGroupElement& a, const FullGroupElement& b) {
    return a.level_ == b.level_ && a.modulus_ == b.modulus_ && a.h_ == b.h_ && a.perm_ == b.perm_;
  }

 private:
  FullGroupElement() = default;
  std::size_t level_ = 0;
  GroupKind kind_ = GroupKind::Dihedral;
  Integer modulus_ = 1;
  std::vector<GroupElement> h_;
  std::vector<std::size_t> perm_;

  friend FullGroupElement multiply(const FullGroupElement& a, const FullGroupElement& b);
};

/// a·b = (k, perm_a ∘ perm_b), k[x] = h_a[perm_b x] h_b[x]. LevelMismatch otherwise.
FullGroupElement multiply(const FullGroupElement& a, const FullGroupElement& b);

/// U = ⋃ {g_k} × A_k.
struct BisectionPair {
  GroupElement g;
  std::vector<std::size_t> cosets;
};
using BisectionForm = std::vector<BisectionPair>;

/// NotPartition unless both the A_k and the g_k A_k partition Z_{n_i}.
FullGroupElement from_bisection(const OdometerSpec& spec, std::size_t level, const BisectionForm& b);
/// Groups cosets by arrow, in order of first occurrence.
BisectionForm to_bisection(const FullGroupElement& u);

/// Class in [[G_i]]_ab ≅ (Γ_i)_ab × Z_2.
struct AbelianClass {
  IntVector lambda;
  bool odd = false;
  IntVector as_vector() const;
  friend bool operator==(const AbelianClass&, const AbelianClass&) = default;
};

/// (Γ_i)_ab × Z_2 presented on the chart generators plus the sign.
FgAbelianGroup fullgroup_abelianization(const AbelianizationChart& chart);

AbelianClass abelianize(const OdometerSpec& spec, const FullGroupElement& u);
/// The (Γ_i)_ab component of abelianize.
IntVector index_map_I(const OdometerSpec& spec, const FullGroupElement& u);

struct JImage {
  FullGroupElement tau;
  AbelianClass cls;
};

/// τ_F for the one-arrow bisection F = {(g, x0)}; defaults to g = (1,0)
/// (or 1), x0 = 0. LevelTooSmall if n_i < 3; InvalidArgument if g x0 = x0.
JImage j_map(const OdometerSpec& spec, std::size_t level,
             std::optional<std::pair<GroupElement, std::size_t>> arrow = std::nullopt);

/// Image of u under [[G_i]] -> [[G_{i+1}]]: each coset of level i+1 uses the
/// arrow over its projection.
FullGroupElement lift(const OdometerSpec& spec, const FullGroupElement& u);

struct AhCertificate {
  std::optional<std::size_t> level;  // empty for the colimit
  FgAbelianGroup h0_tensor_z2;
  FgAbelianGroup fullgroup_ab;
  FgAbelianGroup h1;
  IntMatrix j;
  IntMatrix index_map;
  bool j_injective = false;
  bool middle_exact = false;
  bool index_surjective = false;
  bool natural = true;  // colimit only: naturality squares commute
  bool exact = false;
  std::optional<bool> split;
  std::size_t stabilization_depth = 0;  // colimit only, 1-based level
};

/// H_0(G_i) ⊗ Z_2 is presented on one generator [1_x] ⊗ 1 per Γ-orbit of Z_{n_i}.
AhCertificate ah_certificate(const OdometerSpec& spec, std::size_t level);
/// Dihedral kind, geometric tail.
AhCertificate ah_certificate_colimit(const OdometerSpec& spec, std::size_t window = 3);

}  // namespace odo
