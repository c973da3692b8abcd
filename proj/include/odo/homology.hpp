#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "odo/abelian.hpp"
#include "odo/group_value.hpp"
#include "odo/odometer.hpp"

namespace odo {

/// Z^Y with an involution σ of the finite set Y = {0, ..., |Y|-1}.
class InvolutionModule {
 public:
  /// Throws InvalidArgument unless sigma is an involutive permutation.
  explicit InvolutionModule(std::vector<std::size_t> sigma);
  /// x ↦ -x on Z_n.
  static InvolutionModule negation(std::size_t n);

  std::size_t size() const { return sigma_.size(); }
  const std::vector<std::size_t>& sigma() const { return sigma_; }
  std::size_t fixed_point_count() const;

 private:
  std::vector<std::size_t> sigma_;
};

/// H_n(Z_2, Z^Y) from the 2-periodic resolution.
FgAbelianGroup z2_homology(const InvolutionModule& m, std::size_t degree);

/// Transfer H_degree(Γ_from) -> H_degree(Γ_to), degree 0 or 1. Degree 1 uses
/// the abelianization charts of both levels; `transversal` defaults to the
/// canonical one.
AbHom transfer_between(const OdometerSpec& spec, std::size_t from, std::size_t to,
                       std::size_t degree,
                       const std::optional<std::vector<GroupElement>>& transversal = std::nullopt);

/// Transfer from level i to level i + 1.
AbHom transfer_map(const OdometerSpec& spec, std::size_t level, std::size_t degree);

/// Colimit of Z -> Z along the indices: {m/n_i}.
SupernaturalNumber index_supernatural(const OdometerSpec& spec);

struct HomologyReport {
  std::map<std::size_t, GroupValue> degrees;
  std::size_t max_degree = 0;
  /// Level at which the degree-1 colimit stabilized (0 when not computed by colimit).
  std::size_t h1_stabilization_depth = 0;
};

/// H_*(Γ, C(X, Z)) for the Z and dihedral kinds.
HomologyReport odometer_homology(const OdometerSpec& spec, std::size_t max_degree,
                                 std::size_t window = 3);

}  // namespace odo
