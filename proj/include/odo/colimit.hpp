#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>

#include "odo/abelian.hpp"
#include "odo/supernatural.hpp"

namespace odo {

/// What is assumed about a sequence beyond its listed terms.
struct Tail {
  enum class Kind { Explicit, Geometric };
  Kind kind = Kind::Explicit;
  Integer ratio = 1;  // meaningful for Geometric only

  static Tail explicit_only() { return {}; }
  static Tail geometric(Integer r) { return {Kind::Geometric, std::move(r)}; }
  bool is_geometric() const { return kind == Kind::Geometric; }
  /// "explicit" or "geometric(r)".
  std::string to_string() const;
  friend bool operator==(const Tail&, const Tail&) = default;
};

struct FiniteColimit {
  FgAbelianGroup group;
  std::size_t stabilization_depth;  // 1-based level
};
struct Rank1Colimit {
  SupernaturalNumber supernatural;
};
struct ZeroColimit {};

using ColimitResult = std::variant<FiniteColimit, Rank1Colimit, ZeroColimit>;

/// Where a system of finite groups became stable: images of levels
/// depth .. depth+window-1 in the last level coincide, and for each such
/// level a the image of a in level b no longer shrinks once b >= a+window.
struct StableImage {
  std::size_t depth;  // 0-based index into the system
  std::size_t last;   // 0-based index of the target level
  FgAbelianGroup group;
};

/// maps[k] : groups[k] -> groups[k+1]. Throws NotStabilized if no depth in
/// the supplied system passes the window test.
StableImage stable_image(std::span<const FgAbelianGroup> groups, std::span<const AbHom> maps,
                         std::size_t window);

ColimitResult colimit_finite(std::span<const FgAbelianGroup> groups, std::span<const AbHom> maps,
                             std::size_t window);

/// Colimit of Z --×m1--> Z --×m2--> ... with the given tail assumption.
ColimitResult colimit_rank1(std::span<const Integer> multipliers, const Tail& tail);

}  // namespace odo
