#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "odo/abelian.hpp"
#include "odo/colimit.hpp"
#include "odo/group_element.hpp"

namespace odo {

/// Largest coset space the enumerating operations will materialize.
inline constexpr std::size_t kMaterializeLimit = 1'000'000;

/// n as a size; BudgetExceeded past kMaterializeLimit.
std::size_t materialized_size(const Integer& n, const char* what);

/// The subgroup chain n_1 | n_2 | ..., given explicitly or as start * ratio^(i-1).
struct ChainSpec {
  enum class Kind { Explicit, Geometric };
  Kind kind = Kind::Explicit;
  std::vector<Integer> terms;  // Explicit
  Integer start = 1;           // Geometric
  Integer ratio = 1;           // Geometric

  static ChainSpec explicit_terms(std::vector<Integer> terms) {
    return {Kind::Explicit, std::move(terms), 1, 1};
  }
  static ChainSpec geometric(Integer start, Integer ratio) {
    return {Kind::Geometric, {}, std::move(start), std::move(ratio)};
  }
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Odometer of Γ on lim Γ/Γ_i with Γ_i = n_i Z (⋊ or ×) Z_2, or n_i Z.
///
/// Levels are 1-based; modulus(0) == 1 stands for Γ itself. `depth` bounds
/// the levels an operation may look at. A geometric tail lets callers
/// extend the chain past the listed terms (see `deepened`); an explicit tail
/// forbids every question about the infinite chain.
class OdometerSpec {
 public:
  /// Validates divisibility, strict growth and depth.
  static OdometerSpec make(GroupKind group, ChainSpec chain, std::optional<std::size_t> depth,
                           Tail tail);

  GroupKind group() const { return group_; }
  const ChainSpec& chain() const { return chain_; }
  std::size_t depth() const { return depth_; }
  const Tail& tail() const { return tail_; }

  /// n_i for 0 <= i <= depth; LevelOutOfRange otherwise.
  Integer modulus(std::size_t level) const;
  /// n_{i+1} / n_i.
  Integer ratio(std::size_t level) const { return modulus(level + 1) / modulus(level); }

  /// The same odometer truncated at another depth. Deeper than the listed
  /// terms requires a geometric tail (TailRequired otherwise).
  OdometerSpec deepened(std::size_t depth) const;

  /// Throws TailRequired unless the tail is geometric.
  void require_tail(const std::string& what) const;
  /// "n_{i+1}/n_i is even for infinitely many i".
  bool ratio_even_infinitely_often() const;
  /// "n_i is odd for every i".
  bool all_moduli_odd() const;

  friend bool operator==(const OdometerSpec&, const OdometerSpec&) = default;

 private:
  Integer unchecked_modulus(std::size_t level) const;

  GroupKind group_ = GroupKind::Dihedral;
  ChainSpec chain_;
  std::size_t depth_ = 1;
  Tail tail_;
};

bool in_level_subgroup(const OdometerSpec& spec, std::size_t level, const GroupElement& g);

/// Action of g on Γ/Γ_i ≅ Z_{n_i}: x ↦ t + (-1)^s x for the dihedral group,
/// x ↦ t + x otherwise.
Integer coset_action(const OdometerSpec& spec, std::size_t level, const GroupElement& g,
                     const Integer& coset);

struct TruncatedPoint {
  std::vector<Integer> coords;  // coords[i-1] ∈ Z_{n_i}
  friend bool operator==(const TruncatedPoint&, const TruncatedPoint&) = default;
};

/// All compatible tuples (x_1, ..., x_d), ordered by x_d.
std::vector<TruncatedPoint> truncated_points(const OdometerSpec& spec, std::size_t depth);

struct FixedCount {
  Integer count = 0;
  bool whole_space = false;  // g acts trivially; the fixed set is all of X
};

/// Number of depth-d tuples fixed by g that extend to fixed tuples at depth
/// `horizon`. With no horizon the count of fixed points of g on the inverse
/// limit itself is returned (geometric tail required).
FixedCount fixed_points_extendable(const OdometerSpec& spec, const GroupElement& g,
                                   std::size_t depth, std::optional<std::size_t> horizon);

/// (m_(0,1), m_(1,1)) on the inverse limit of a dihedral odometer.
std::pair<Integer, Integer> dihedral_fixed_counts(const OdometerSpec& spec);

struct ChainIntersection {
  std::vector<GroupElement> elements;
  /// Set for explicit tails: `elements` is the intersection for every
  /// strictly increasing continuation, while the listed levels alone only
  /// cut down to Γ_depth = truncation_modulus Z (⋊/×) Z_2.
  bool truncated = false;
  Integer truncation_modulus = 0;
};

ChainIntersection chain_intersection(const OdometerSpec& spec);

struct FreenessWitness {
  GroupElement gamma;
  std::size_t level;
  GroupElement b;          // b ∈ Γ_level
  GroupElement conjugate;  // b γ b^-1, outside ∩Γ_i
};

struct TopFreeVerdict {
  enum class Kind { Free, NotFree, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<FreenessWitness> witnesses;
  std::optional<GroupElement> counter_gamma;
  std::size_t counter_level = 0;
  std::string reason;
};

std::string_view verdict_name(TopFreeVerdict::Kind kind);

TopFreeVerdict is_topologically_free(const OdometerSpec& spec, std::size_t search_depth);

/// g reps[k] = reps[sigma[k]] h[k] with h[k] in the inner subgroup.
struct CocycleData {
  std::size_t outer_level = 0;
  std::size_t level = 0;  // the inner level
  GroupElement g;
  std::vector<GroupElement> reps;
  std::vector<std::size_t> sigma;
  std::vector<GroupElement> h;
};

/// Canonical transversal of Γ_outer / Γ_inner: (k n_outer, 0), k = 0..r-1.
std::vector<GroupElement> canonical_transversal(const OdometerSpec& spec, std::size_t outer_level,
                                                std::size_t inner_level);

/// Cocycle of g ∈ Γ_outer acting on Γ_outer / Γ_inner with a given transversal;
/// reps[k] must lie in coset k.
CocycleData relative_cocycle(const OdometerSpec& spec, std::size_t outer_level,
                             std::size_t inner_level, const GroupElement& g,
                             const std::vector<GroupElement>& reps);

/// Cocycle of g on Γ/Γ_level with the canonical transversal (k, 0).
CocycleData cocycle(const OdometerSpec& spec, std::size_t level, const GroupElement& g);

/// (Γ_i)_ab in fixed coordinates: Z_2 × Z_2 via (t,s) ↦ (t/n_i mod 2, s) for
/// the dihedral group, Z via t ↦ t/n_i, and Z × Z_2 for Z × Z_2.
class AbelianizationChart {
 public:
  AbelianizationChart(const OdometerSpec& spec, std::size_t level);

  const FgAbelianGroup& group() const { return group_; }
  /// Coordinates of g ∈ Γ_level, reduced.
  IntVector coords(const GroupElement& g) const;
  /// Subgroup elements mapping to the unit vectors.
  const std::vector<GroupElement>& generators() const { return generators_; }
  /// Reduces coordinates (mod 2 in the Z_2 slots).
  IntVector reduce(IntVector v) const;

 private:
  GroupKind kind_;
  Integer modulus_;
  FgAbelianGroup group_;
  std::vector<GroupElement> generators_;
};

}  // namespace odo
