#include "odo/colimit.hpp"

#include <vector>

#include "odo/error.hpp"

namespace odo {

std::string Tail::to_string() const {
  return is_geometric() ? "geometric(" + ratio.get_str() + ")" : "explicit";
}

StableImage stable_image(std::span<const FgAbelianGroup> groups, std::span<const AbHom> maps,
                         std::size_t window) {
  const std::size_t n = groups.size();
  if (window < 2) fail(Errc::InvalidArgument, "colimit window must be at least 2");
  if (n < 2 * window) fail(Errc::InvalidArgument, "colimit system shorter than twice its window");
  if (maps.size() + 1 != n) fail(Errc::InvalidArgument, "colimit system needs one map per step");
  for (std::size_t k = 0; k < n; ++k) {
    if (!groups[k].is_finite()) fail(Errc::InvalidArgument, "colimit_finite needs finite groups");
    if (k + 1 < n && (!maps[k].domain().same_presentation(groups[k]) ||
                      !maps[k].codomain().same_presentation(groups[k + 1])))
      fail(Errc::DomainMismatch, "colimit map does not connect consecutive groups");
  }

  const std::size_t last = n - 1;
  // composite[a][b - a] : groups[a] -> groups[b]
  std::vector<std::vector<AbHom>> composite(n);
  std::vector<std::vector<Integer>> image_order(n);
  for (std::size_t a = 0; a < n; ++a) {
    composite[a].push_back(AbHom::identity(groups[a]));
    image_order[a].push_back(groups[a].order());
    for (std::size_t b = a; b < last; ++b) {
      composite[a].push_back(compose(maps[b], composite[a].back()));
      image_order[a].push_back(composite[a].back().image().order());
    }
  }

  for (std::size_t d = 0; d + 2 * window - 1 <= last; ++d) {
    const IntMatrix reference = composite[d][last - d].image_lattice();
    bool stable = true;
    for (std::size_t a = d; a < d + window && stable; ++a) {
      if (!lattice_equal(composite[a][last - a].image_lattice(), reference)) stable = false;
      for (std::size_t b = a + window; b <= last && stable; ++b)
        if (image_order[a][b - a] != image_order[a][last - a]) stable = false;
    }
    if (stable) return {d, last, composite[d][last - d].image()};
  }
  fail(Errc::NotStabilized, "composite images still change within the window; deepen the system");
}

ColimitResult colimit_finite(std::span<const FgAbelianGroup> groups, std::span<const AbHom> maps,
                             std::size_t window) {
  StableImage s = stable_image(groups, maps, window);
  if (s.group.is_trivial()) return ZeroColimit{};
  return FiniteColimit{std::move(s.group), s.depth + 1};
}

ColimitResult colimit_rank1(std::span<const Integer> multipliers, const Tail& tail) {
  if (multipliers.empty()) fail(Errc::InvalidArgument, "colimit_rank1 needs at least one multiplier");
  SupernaturalNumber s;
  for (const auto& m : multipliers) {
    if (m < 1) fail(Errc::InvalidArgument, "multipliers must be positive");
    s.multiply(m);
  }
  if (tail.is_geometric()) {
    if (tail.ratio < 1) fail(Errc::InvalidArgument, "geometric ratio must be positive");
    for (const auto& p : SupernaturalNumber::infinite_support_of(tail.ratio).infinite_primes())
      s.make_infinite(p);
  }
  return Rank1Colimit{std::move(s)};
}

}  // namespace odo
