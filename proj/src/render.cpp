#include "odo/group_value.hpp"

#include <vector>

namespace odo {

std::string render_group(const FgAbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank() == 1) parts.push_back("Z");
  else if (g.free_rank() > 1) parts.push_back("Z^" + std::to_string(g.free_rank()));
  const auto& t = g.invariant_factors();
  for (std::size_t k = 0; k < t.size();) {
    std::size_t run = 1;
    while (k + run < t.size() && t[k + run] == t[k]) ++run;
    std::string part = "Z_" + t[k].get_str();
    if (run > 1) part += "^" + std::to_string(run);
    parts.push_back(std::move(part));
    k += run;
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " (+) " + parts[k];
  return out;
}

std::string render_rank1(const SupernaturalNumber& s) {
  if (s.is_one()) return "Z";
  if (!s.has_finite_part()) {
    Integer radical = 1;
    for (const auto& p : s.infinite_primes()) radical *= p;
    return "Z[1/" + radical.get_str() + "]";
  }
  return "{m/n_i} over " + s.to_string();
}

std::string GroupValue::to_string() const {
  std::string out;
  if (rank1) out = render_rank1(*rank1);
  if (!fg.is_trivial()) {
    if (!out.empty()) out += " (+) ";
    out += render_group(fg);
  }
  return out.empty() ? "0" : out;
}

bool iso_equal(const GroupValue& a, const GroupValue& b) {
  // A rank-1 part with finite supernatural is Z; fold it into the free rank.
  auto normalize = [](const GroupValue& v) {
    std::size_t extra_free = 0;
    std::optional<SupernaturalNumber> r = v.rank1;
    if (r && r->infinite_primes().empty()) {
      extra_free = 1;
      r.reset();
    }
    return std::pair{r, FgAbelianGroup::from_invariants(v.fg.free_rank() + extra_free,
                                                        v.fg.invariant_factors())};
  };
  const auto [ra, ga] = normalize(a);
  const auto [rb, gb] = normalize(b);
  if (ra.has_value() != rb.has_value()) return false;
  if (ra && !supernatural_iso_equal(*ra, *rb)) return false;
  return ga == gb;
}

}  // namespace odo
