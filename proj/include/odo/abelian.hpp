#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "odo/int_matrix.hpp"
#include "odo/smith.hpp"

namespace odo {

// ---------------------------------------------------------------------------
// Lattices in Z^n, given by generating columns.

/// Columns forming a basis of the column span of `a` (full column rank).
IntMatrix image_basis(const IntMatrix& a);

/// Columns forming a basis of the integer kernel {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some x with a * x = v, computed from a precomputed decomposition of a.
std::optional<IntVector> solve(const SmithDecomposition& snf, std::span<const Integer> v);

bool lattice_contains(const IntMatrix& outer, const IntMatrix& inner);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

// ---------------------------------------------------------------------------

/// A finitely generated abelian group Z^g / colspan(R), together with its
/// canonical form (free rank + invariant factors, each >= 2, each dividing
/// the next). Equality compares canonical forms, i.e. isomorphism class.
class FgAbelianGroup {
 public:
  /// The trivial group.
  FgAbelianGroup();

  static FgAbelianGroup from_presentation(std::size_t generators, IntMatrix relations);
  /// Canonical presentation: free generators first, then one generator per
  /// torsion coefficient. Entries equal to 1 are dropped, 0 counts as free.
  static FgAbelianGroup from_invariants(std::size_t free_rank, std::vector<Integer> torsion);
  static FgAbelianGroup free(std::size_t rank) { return from_invariants(rank, {}); }
  static FgAbelianGroup cyclic(const Integer& order) { return from_invariants(0, {order}); }
  /// Z^rows / column-span(a).
  static FgAbelianGroup cokernel(const IntMatrix& a) {
    return from_presentation(a.rows(), a);
  }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return torsion_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Order of a finite group.
  Integer order() const;

  std::size_t generator_count() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  /// True when v (in generator coordinates) is zero in the group.
  bool is_zero_element(std::span<const Integer> v) const;
  /// Same generator count and same relation lattice.
  bool same_presentation(const FgAbelianGroup& other) const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_;
  std::shared_ptr<const SmithDecomposition> snf_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

inline bool iso_equal(const FgAbelianGroup& g, const FgAbelianGroup& h) { return g == h; }

/// Homomorphism given on presentation generators: column k of `matrix` is the
/// image of generator k. Well-definedness is checked on construction.
class AbHom {
 public:
  AbHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix);

  static AbHom identity(const FgAbelianGroup& g);
  static AbHom zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain);

  const FgAbelianGroup& domain() const { return domain_; }
  const FgAbelianGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(std::span<const Integer> x) const { return matrix_.apply(x); }

  /// Generators of {x in Z^g : f(x) = 0}; contains the domain relations.
  IntMatrix kernel_lattice() const;
  /// Generators of the preimage in Z^h of the image subgroup.
  IntMatrix image_lattice() const;

  FgAbelianGroup kernel() const;
  FgAbelianGroup image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;

  /// Same (co)domain presentations and the same map on elements.
  bool equals(const AbHom& other) const;

 private:
  FgAbelianGroup domain_;
  FgAbelianGroup codomain_;
  IntMatrix matrix_;
};

/// g ∘ f. Throws DomainMismatch unless f.codomain and g.domain share a presentation.
AbHom compose(const AbHom& g, const AbHom& f);

/// The quotient L_outer / L_inner of lattices; throws ImageNotContained if
/// the inner lattice is not contained in the outer one.
FgAbelianGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

/// ker(kernel_of) / im(image_of).
FgAbelianGroup subquotient(const AbHom& kernel_of, const AbHom& image_of);

/// True iff im f = ker g.
bool check_exactness(const AbHom& f, const AbHom& g);

}  // namespace odo
