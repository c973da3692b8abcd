#include "odo/odometer.hpp"

#include <algorithm>
#include <set>

#include "odo/error.hpp"

namespace odo {

namespace {

void require_kind(const OdometerSpec& spec, const GroupElement& g) {
  if (g.kind != spec.group())
    fail(Errc::WrongGroupKind, "element of " + std::string(group_kind_name(g.kind)) +
                                   " used with a " + std::string(group_kind_name(spec.group())) +
                                   " odometer");
}

// Every Γ_i contains the elements with t = 0, and n_i -> ∞ removes the rest.
bool in_chain_intersection(const GroupElement& g) { return g.t == 0; }

}  // namespace

std::size_t materialized_size(const Integer& n, const char* what) {
  std::size_t out = 0;
  if (!to_size(n, out) || out > kMaterializeLimit)
    fail(Errc::BudgetExceeded, std::string(what) + ": " + n.get_str() + " cosets exceed the enumeration budget");
  return out;
}

// ---------------------------------------------------------------------------
// OdometerSpec

OdometerSpec OdometerSpec::make(GroupKind group, ChainSpec chain, std::optional<std::size_t> depth,
                                Tail tail) {
  OdometerSpec spec;
  spec.group_ = group;
  if (tail.is_geometric() && tail.ratio < 2)
    fail(Errc::NotStrictlyIncreasing, "geometric tail ratio must be at least 2");

  if (chain.kind == ChainSpec::Kind::Explicit) {
    if (chain.terms.empty()) fail(Errc::BadDepth, "explicit chain has no terms");
    if (chain.terms.front() < 1) fail(Errc::NotStrictlyIncreasing, "chain terms must be positive");
    for (std::size_t k = 0; k + 1 < chain.terms.size(); ++k) {
      const Integer& a = chain.terms[k];
      const Integer& b = chain.terms[k + 1];
      if (b <= a)
        fail(Errc::NotStrictlyIncreasing,
             "chain is not strictly increasing at " + a.get_str() + ", " + b.get_str());
      if (!divides(a, b))
        fail(Errc::NotDivisible, a.get_str() + " does not divide " + b.get_str());
    }
    spec.depth_ = depth.value_or(chain.terms.size());
    if (!tail.is_geometric() && spec.depth_ > chain.terms.size())
      fail(Errc::BadDepth, "depth exceeds the listed chain and no geometric tail is given");
  } else {
    if (chain.start < 1) fail(Errc::NotStrictlyIncreasing, "chain start must be positive");
    if (chain.ratio < 2) fail(Errc::NotStrictlyIncreasing, "geometric ratio must be at least 2");
    if (tail.is_geometric() && tail.ratio != chain.ratio)
      fail(Errc::InvalidArgument, "tail ratio disagrees with the geometric chain");
    tail = Tail::geometric(chain.ratio);
    spec.depth_ = depth.value_or(8);
  }
  if (spec.depth_ == 0) fail(Errc::BadDepth, "depth must be at least 1");
  spec.chain_ = std::move(chain);
  spec.tail_ = std::move(tail);
  return spec;
}

Integer OdometerSpec::unchecked_modulus(std::size_t level) const {
  if (level == 0) return 1;
  if (chain_.kind == ChainSpec::Kind::Geometric)
    return chain_.start * pow_ui(chain_.ratio, level - 1);
  const std::size_t listed = chain_.terms.size();
  if (level <= listed) return chain_.terms[level - 1];
  if (!tail_.is_geometric())
    fail(Errc::LevelOutOfRange, "level " + std::to_string(level) + " is past the explicit chain");
  return chain_.terms.back() * pow_ui(tail_.ratio, level - listed);
}

Integer OdometerSpec::modulus(std::size_t level) const {
  if (level > depth_)
    fail(Errc::LevelOutOfRange,
         "level " + std::to_string(level) + " exceeds depth " + std::to_string(depth_));
  return unchecked_modulus(level);
}

OdometerSpec OdometerSpec::deepened(std::size_t depth) const {
  if (depth == 0) fail(Errc::BadDepth, "depth must be at least 1");
  const bool listed = chain_.kind == ChainSpec::Kind::Explicit && depth <= chain_.terms.size();
  if (!listed && !tail_.is_geometric() && depth > depth_)
    fail(Errc::TailRequired, "extending an explicit chain needs a tail assumption");
  OdometerSpec out = *this;
  out.depth_ = depth;
  return out;
}

void OdometerSpec::require_tail(const std::string& what) const {
  if (!tail_.is_geometric())
    fail(Errc::TailRequired, what + " depends on the whole chain; supply a geometric tail");
}

bool OdometerSpec::ratio_even_infinitely_often() const {
  require_tail("the parity of infinitely many ratios");
  return !is_odd(tail_.ratio);
}

bool OdometerSpec::all_moduli_odd() const {
  require_tail("the parity of every n_i");
  if (!is_odd(tail_.ratio)) return false;
  if (chain_.kind == ChainSpec::Kind::Geometric) return is_odd(chain_.start);
  return std::all_of(chain_.terms.begin(), chain_.terms.end(),
                     [](const Integer& n) { return is_odd(n); });
}

// ---------------------------------------------------------------------------

bool in_level_subgroup(const OdometerSpec& spec, std::size_t level, const GroupElement& g) {
  require_kind(spec, g);
  return divides(spec.modulus(level), g.t);
}

Integer coset_action(const OdometerSpec& spec, std::size_t level, const GroupElement& g,
                     const Integer& coset) {
  require_kind(spec, g);
  if (level == 0) fail(Errc::LevelOutOfRange, "levels start at 1");
  const Integer n = spec.modulus(level);
  if (coset < 0 || coset >= n) fail(Errc::InvalidArgument, "coset label out of range");
  return mod_floor(g.orientation() < 0 ? Integer(g.t - coset) : Integer(g.t + coset), n);
}

std::vector<TruncatedPoint> truncated_points(const OdometerSpec& spec, std::size_t depth) {
  if (depth == 0) fail(Errc::LevelOutOfRange, "levels start at 1");
  const Integer top = spec.modulus(depth);
  const std::size_t count = materialized_size(top, "truncated_points");
  std::vector<Integer> moduli;
  for (std::size_t i = 1; i <= depth; ++i) moduli.push_back(spec.modulus(i));
  std::vector<TruncatedPoint> out;
  out.reserve(count);
  for (std::size_t x = 0; x < count; ++x) {
    TruncatedPoint p;
    for (const auto& n : moduli) p.coords.push_back(mod_floor(Integer(x), n));
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fixed points

namespace {

// Fixed set of x ↦ t + εx on Z_n: either everything or an explicit list.
struct LevelFixedSet {
  bool all = false;
  std::vector<Integer> points;
};

LevelFixedSet level_fixed_set(const GroupElement& g, const Integer& n) {
  LevelFixedSet out;
  if (g.orientation() > 0) {
    out.all = divides(n, g.t);
    return out;
  }
  // 2x ≡ t (mod n)
  if (is_odd(n)) {
    Integer inv2;
    const Integer two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), n.get_mpz_t());
    out.points.push_back(mod_floor(g.t * inv2, n));
  } else if (!is_odd(g.t)) {
    const Integer x0 = mod_floor(g.t / 2, n);
    out.points.push_back(x0);
    out.points.push_back(mod_floor(x0 + n / 2, n));
  }
  return out;
}

}  // namespace

FixedCount fixed_points_extendable(const OdometerSpec& spec, const GroupElement& g,
                                   std::size_t depth, std::optional<std::size_t> horizon) {
  require_kind(spec, g);
  if (depth == 0) fail(Errc::LevelOutOfRange, "levels start at 1");
  const Integer nd = spec.modulus(depth);

  if (!horizon) {
    spec.require_tail("the fixed-point count on the inverse limit");
    if (g.orientation() > 0) return {0, g.t == 0};
    // A reflection (t,1): 1 fixed point when every n_i is odd; none when t is
    // odd and some n_i is even; else 1 or 2 depending on whether the two
    // level solutions t/2 and t/2 + n_i/2 merge under infinitely many even
    // ratios.
    if (spec.all_moduli_odd()) return {1, false};
    if (is_odd(g.t)) return {0, false};
    return {spec.ratio_even_infinitely_often() ? 1 : 2, false};
  }

  if (*horizon < depth) fail(Errc::InvalidArgument, "horizon must not be below the depth");
  const OdometerSpec deep = *horizon > spec.depth() ? spec.deepened(*horizon) : spec;
  const LevelFixedSet fixed = level_fixed_set(g, deep.modulus(*horizon));
  if (fixed.all) return {nd, true};
  std::set<Integer> projected;
  for (const auto& x : fixed.points) projected.insert(mod_floor(x, nd));
  return {Integer(static_cast<unsigned long>(projected.size())), false};
}

std::pair<Integer, Integer> dihedral_fixed_counts(const OdometerSpec& spec) {
  if (spec.group() != GroupKind::Dihedral)
    fail(Errc::WrongGroupKind, "fixed counts of (0,1) and (1,1) are defined for the dihedral odometer");
  const auto a = fixed_points_extendable(spec, GroupElement::make(GroupKind::Dihedral, 0, true), 1,
                                         std::nullopt);
  const auto b = fixed_points_extendable(spec, GroupElement::make(GroupKind::Dihedral, 1, true), 1,
                                         std::nullopt);
  return {a.count, b.count};
}

// ---------------------------------------------------------------------------
// Chain intersection and topological freeness

ChainIntersection chain_intersection(const OdometerSpec& spec) {
  ChainIntersection out;
  out.elements.push_back(GroupElement::identity(spec.group()));
  if (spec.group() != GroupKind::Z) out.elements.push_back(GroupElement::make(spec.group(), 0, true));
  if (!spec.tail().is_geometric()) {
    out.truncated = true;
    out.truncation_modulus = spec.modulus(spec.depth());
  }
  return out;
}

std::string_view verdict_name(TopFreeVerdict::Kind kind) {
  switch (kind) {
    case TopFreeVerdict::Kind::Free: return "Free";
    case TopFreeVerdict::Kind::NotFree: return "NotFree";
    case TopFreeVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

TopFreeVerdict is_topologically_free(const OdometerSpec& spec, std::size_t search_depth) {
  TopFreeVerdict verdict;
  std::vector<GroupElement> nontrivial;
  for (const auto& g : chain_intersection(spec).elements)
    if (!g.is_identity()) nontrivial.push_back(g);

  if (nontrivial.empty()) {
    verdict.kind = TopFreeVerdict::Kind::Free;
    verdict.reason = "the chain intersection is trivial";
    return verdict;
  }
  std::size_t levels = search_depth;
  if (levels > spec.depth() && !spec.tail().is_geometric()) levels = spec.depth();
  if (levels == 0) {
    verdict.reason = "no levels searched";
    return verdict;
  }
  const OdometerSpec deep = levels > spec.depth() ? spec.deepened(levels) : spec;
  const auto gens = group_generators(spec.group());

  for (const auto& gamma : nontrivial) {
    for (std::size_t j = 1; j <= levels; ++j) {
      const Integer nj = deep.modulus(j);
      std::optional<FreenessWitness> found;
      for (long k : {1L, -1L, 2L, -2L, 3L, -3L}) {
        for (bool s : {false, true}) {
          if (s && spec.group() == GroupKind::Z) continue;
          const GroupElement b = GroupElement::make(spec.group(), nj * k, s);
          const GroupElement conj = b * gamma * b.inverse();
          if (!in_chain_intersection(conj)) {
            found = FreenessWitness{gamma, j, b, conj};
            break;
          }
        }
        if (found) break;
      }
      if (found) {
        verdict.witnesses.push_back(std::move(*found));
        continue;
      }
      const bool central = std::all_of(gens.begin(), gens.end(), [&](const GroupElement& x) {
        return x * gamma == gamma * x;
      });
      verdict.counter_gamma = gamma;
      verdict.counter_level = j;
      if (central) {
        verdict.kind = TopFreeVerdict::Kind::NotFree;
        verdict.reason = gamma.to_string() +
                         " is central, so every conjugate by b ∈ Γ_j stays in the chain intersection";
      } else {
        verdict.kind = TopFreeVerdict::Kind::Inconclusive;
        verdict.reason = "no witness among the tested conjugators and no closed-form confirmation";
      }
      return verdict;
    }
  }
  verdict.kind = TopFreeVerdict::Kind::Free;
  verdict.reason = "witness found for every nontrivial element of the chain intersection up to level " +
                   std::to_string(levels);
  return verdict;
}

// ---------------------------------------------------------------------------
// Cocycles

std::vector<GroupElement> canonical_transversal(const OdometerSpec& spec, std::size_t outer_level,
                                                std::size_t inner_level) {
  if (inner_level <= outer_level) fail(Errc::LevelOutOfRange, "inner level must exceed the outer level");
  const Integer no = spec.modulus(outer_level);
  const std::size_t r = materialized_size(spec.modulus(inner_level) / no, "transversal");
  std::vector<GroupElement> reps;
  reps.reserve(r);
  for (std::size_t k = 0; k < r; ++k)
    reps.push_back(GroupElement::make(spec.group(), no * static_cast<unsigned long>(k), false));
  return reps;
}

CocycleData relative_cocycle(const OdometerSpec& spec, std::size_t outer_level,
                             std::size_t inner_level, const GroupElement& g,
                             const std::vector<GroupElement>& reps) {
  if (inner_level <= outer_level) fail(Errc::LevelOutOfRange, "inner level must exceed the outer level");
  const Integer no = spec.modulus(outer_level);
  const Integer ni = spec.modulus(inner_level);
  const Integer r = ni / no;
  const std::size_t count = materialized_size(r, "cocycle");
  if (reps.size() != count) fail(Errc::InvalidArgument, "transversal has the wrong size");
  if (!in_level_subgroup(spec, outer_level, g))
    fail(Errc::InvalidArgument, "element is not in the outer subgroup");

  auto label = [&](const GroupElement& x) -> std::size_t {
    return mod_floor(x.t / no, r).get_ui();
  };
  for (std::size_t k = 0; k < count; ++k)
    if (!in_level_subgroup(spec, outer_level, reps[k]) || label(reps[k]) != k)
      fail(Errc::InvalidArgument, "transversal element " + std::to_string(k) + " is not in coset " +
                                      std::to_string(k));

  CocycleData out;
  out.outer_level = outer_level;
  out.level = inner_level;
  out.g = g;
  out.reps = reps;
  out.sigma.resize(count);
  out.h.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const GroupElement moved = g * reps[k];
    const std::size_t target = label(moved);
    out.sigma[k] = target;
    GroupElement h = reps[target].inverse() * moved;
    if (!divides(ni, h.t)) fail(Errc::InvariantViolation, "cocycle value left the inner subgroup");
    out.h.push_back(std::move(h));
  }
  return out;
}

CocycleData cocycle(const OdometerSpec& spec, std::size_t level, const GroupElement& g) {
  require_kind(spec, g);
  return relative_cocycle(spec, 0, level, g, canonical_transversal(spec, 0, level));
}

// ---------------------------------------------------------------------------

AbelianizationChart::AbelianizationChart(const OdometerSpec& spec, std::size_t level)
    : kind_(spec.group()), modulus_(spec.modulus(level)) {
  switch (kind_) {
    case GroupKind::Dihedral:
      group_ = FgAbelianGroup::from_invariants(0, {2, 2});
      break;
    case GroupKind::Z:
      group_ = FgAbelianGroup::free(1);
      break;
    case GroupKind::DirectProduct:
      group_ = FgAbelianGroup::from_invariants(1, {2});
      break;
  }
  generators_.push_back(GroupElement::make(kind_, modulus_, false));
  if (kind_ != GroupKind::Z) generators_.push_back(GroupElement::make(kind_, 0, true));
}

IntVector AbelianizationChart::coords(const GroupElement& g) const {
  if (g.kind != kind_ || !divides(modulus_, g.t))
    fail(Errc::InvalidArgument, g.to_string() + " is not in the level subgroup");
  IntVector v{g.t / modulus_};
  if (kind_ != GroupKind::Z) v.push_back(g.s ? 1 : 0);
  return reduce(std::move(v));
}

IntVector AbelianizationChart::reduce(IntVector v) const {
  if (kind_ == GroupKind::Dihedral) v[0] = mod_floor(v[0], 2);
  if (kind_ != GroupKind::Z) v[1] = mod_floor(v[1], 2);
  return v;
}

}  // namespace odo
