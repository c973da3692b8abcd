#include "odo/group_element.hpp"

#include "odo/error.hpp"

namespace odo {

std::string_view group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Z: return "z";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::DirectProduct: return "direct_product";
  }
  return "?";
}

GroupElement GroupElement::make(GroupKind kind, Integer t, bool s) {
  if (kind == GroupKind::Z && s) fail(Errc::InvalidArgument, "Z has no Z_2 component");
  return {kind, std::move(t), s};
}

GroupElement GroupElement::inverse() const {
  if (kind == GroupKind::Dihedral && s) return *this;  // reflections are involutions
  return {kind, -t, s};
}

std::string GroupElement::to_string() const {
  if (kind == GroupKind::Z) return t.get_str();
  return "(" + t.get_str() + "," + (s ? "1" : "0") + ")";
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.kind != b.kind) fail(Errc::InvalidArgument, "product of elements of different groups");
  GroupElement out{a.kind, a.t, a.s != b.s};
  if (a.orientation() < 0) out.t -= b.t;
  else out.t += b.t;
  return out;
}

std::vector<GroupElement> group_generators(GroupKind kind) {
  if (kind == GroupKind::Z) return {GroupElement::make(kind, 1)};
  return {GroupElement::make(kind, 1, false), GroupElement::make(kind, 0, true)};
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace odo
