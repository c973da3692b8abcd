#pragma once

#include <optional>
#include <string>

#include "odo/abelian.hpp"
#include "odo/supernatural.hpp"

namespace odo {

/// Canonical string of a finitely generated abelian group:
/// "0", "Z", "Z^3", "Z_2", "Z_2^2", "Z (+) Z_2 (+) Z_4".
std::string render_group(const FgAbelianGroup& g);

/// The rank-1 group {m/n : n | s}: "Z" when s = 1, "Z[1/6]" when every
/// prime of s has infinite multiplicity, "{m/n_i} over <s>" otherwise.
std::string render_rank1(const SupernaturalNumber& s);

/// A group of the form R ⊕ A with R an optional rank-1 subgroup of Q and A
/// finitely generated. This is the shape of every homology and K-theory
/// answer reported here.
struct GroupValue {
  std::optional<SupernaturalNumber> rank1;
  FgAbelianGroup fg;

  static GroupValue of(FgAbelianGroup g) { return {std::nullopt, std::move(g)}; }
  static GroupValue of_rank1(SupernaturalNumber s, FgAbelianGroup g = {}) {
    return {std::move(s), std::move(g)};
  }

  bool is_zero() const { return !rank1 && fg.is_trivial(); }
  std::string to_string() const;
};

/// Abstract isomorphism: rank-1 parts compared by supernatural_iso_equal.
bool iso_equal(const GroupValue& a, const GroupValue& b);

}  // namespace odo
