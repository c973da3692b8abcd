#pragma once

#include <cstddef>
#include <vector>

#include "odo/abelian.hpp"

namespace odo {

/// A finite group given by its multiplication table on {0, ..., order-1}.
class FiniteGroup {
 public:
  /// Checks closure, associativity, identity and inverses.
  FiniteGroup(std::size_t order, std::vector<std::size_t> table);
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

 private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Transformation groupoid Γ ⋉ X of a finite group acting on a finite set.
class FiniteGroupoid {
 public:
  /// action[g * points + x] = g·x; checks the identity and action laws.
  FiniteGroupoid(FiniteGroup group, std::size_t points, std::vector<std::size_t> action);
  /// Z_2 acting on Z_n by negation.
  static FiniteGroupoid negation(std::size_t n);

  const FiniteGroup& group() const { return group_; }
  std::size_t points() const { return points_; }
  std::size_t act(std::size_t g, std::size_t x) const { return action_[g * points_ + x]; }

 private:
  FiniteGroup group_;
  std::size_t points_;
  std::vector<std::size_t> action_;
};

inline constexpr std::size_t kDefaultChainBudget = 1'000'000;

/// Number of composable n-tuples, |Γ|^n |X|.
std::size_t composable_count(const FiniteGroupoid& g, std::size_t n);

/// δ_n : Z^{G^(n)} -> Z^{G^(n-1)}, n >= 1, tuples (g_1, ..., g_n, x) with x
/// the source of g_n, ordered lexicographically.
IntMatrix groupoid_boundary(const FiniteGroupoid& g, std::size_t n,
                            std::size_t budget = kDefaultChainBudget);

/// H_n(G) = ker δ_n / im δ_{n+1}; H_0 = coker δ_1. BudgetExceeded when
/// |Γ|^(n+1) |X| exceeds the budget.
FgAbelianGroup groupoid_chain_homology(const FiniteGroupoid& g, std::size_t n,
                                       std::size_t budget = kDefaultChainBudget);

}  // namespace odo
