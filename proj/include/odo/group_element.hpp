#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "odo/integer.hpp"

namespace odo {

/// The three acting groups: Z, the infinite dihedral group Z ⋊ Z_2 (Z_2
/// acting by negation), and Z × Z_2.
enum class GroupKind { Z, Dihedral, DirectProduct };

std::string_view group_kind_name(GroupKind kind);

/// Element (t, s) of the acting group; s is always 0 for GroupKind::Z.
struct GroupElement {
  GroupKind kind = GroupKind::Z;
  Integer t = 0;
  bool s = false;

  static GroupElement identity(GroupKind kind) { return {kind, 0, false}; }
  static GroupElement make(GroupKind kind, Integer t, bool s = false);

  bool is_identity() const { return t == 0 && !s; }
  GroupElement inverse() const;
  /// (-1)^s as the sign with which the element acts on the Z coordinate.
  int orientation() const { return kind == GroupKind::Dihedral && s ? -1 : 1; }

  std::string to_string() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.kind == b.kind && a.t == b.t && a.s == b.s;
  }
};

/// A fixed generating set: {1} for Z, {(1,0), (0,1)} otherwise.
std::vector<GroupElement> group_generators(GroupKind kind);

/// a b a^-1 b^-1
GroupElement commutator(const GroupElement& a, const GroupElement& b);

}  // namespace odo
