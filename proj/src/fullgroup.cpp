#include "odo/fullgroup.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include "odo/error.hpp"
#include "odo/homology.hpp"

namespace odo {

namespace {

Integer as_integer(std::size_t x) { return Integer(static_cast<unsigned long>(x)); }

GroupElement rep(GroupKind kind, std::size_t x) { return GroupElement::make(kind, as_integer(x)); }

std::size_t coset_index(const OdometerSpec& spec, std::size_t level, const GroupElement& g,
                        std::size_t x) {
  return coset_action(spec, level, g, as_integer(x)).get_ui();
}

bool is_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool odd_permutation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = p[y]) seen[y] = true;
  }
  return (p.size() - cycles) % 2 == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements

FullGroupElement FullGroupElement::make(const OdometerSpec& spec, std::size_t level,
                                        std::vector<GroupElement> h, std::vector<std::size_t> perm) {
  if (level == 0) fail(Errc::LevelOutOfRange, "full group levels start at 1");
  const Integer n = spec.modulus(level);
  const std::size_t size = materialized_size(n, "full group element");
  if (h.size() != size || perm.size() != size)
    fail(Errc::InvalidArgument, "wreath data must have one entry per coset");
  if (!is_permutation(perm)) fail(Errc::InvalidArgument, "perm is not a permutation");
  for (std::size_t x = 0; x < size; ++x)
    if (!in_level_subgroup(spec, level, h[x]))
      fail(Errc::InvalidArgument, "h[" + std::to_string(x) + "] = " + h[x].to_string() +
                                      " is not in the level subgroup");
  FullGroupElement u;
  u.level_ = level;
  u.kind_ = spec.group();
  u.modulus_ = n;
  u.h_ = std::move(h);
  u.perm_ = std::move(perm);
  return u;
}

FullGroupElement FullGroupElement::identity(const OdometerSpec& spec, std::size_t level) {
  const std::size_t n = materialized_size(spec.modulus(level), "full group element");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return make(spec, level, std::vector<GroupElement>(n, GroupElement::identity(spec.group())),
              std::move(perm));
}

FullGroupElement FullGroupElement::zeta(const OdometerSpec& spec, std::size_t level,
                                        const GroupElement& lambda) {
  FullGroupElement u = identity(spec, level);
  if (!in_level_subgroup(spec, level, lambda))
    fail(Errc::InvalidArgument, lambda.to_string() + " is not in the level subgroup");
  u.h_[0] = lambda;
  return u;
}

FullGroupElement FullGroupElement::eta(const OdometerSpec& spec, std::size_t level,
                                       std::vector<std::size_t> perm) {
  const std::size_t n = perm.size();
  return make(spec, level, std::vector<GroupElement>(n, GroupElement::identity(spec.group())),
              std::move(perm));
}

GroupElement FullGroupElement::arrow(std::size_t x) const {
  return rep(kind_, perm_.at(x)) * h_.at(x) * rep(kind_, x).inverse();
}

FullGroupElement FullGroupElement::inverse() const {
  FullGroupElement u = *this;
  for (std::size_t x = 0; x < perm_.size(); ++x) {
    u.perm_[perm_[x]] = x;
    u.h_[perm_[x]] = h_[x].inverse();
  }
  return u;
}

FullGroupElement multiply(const FullGroupElement& a, const FullGroupElement& b) {
  if (a.level_ != b.level_ || a.modulus_ != b.modulus_ || a.kind_ != b.kind_)
    fail(Errc::LevelMismatch, "full group elements live at different levels");
  FullGroupElement out = a;
  for (std::size_t x = 0; x < b.perm_.size(); ++x) {
    out.h_[x] = a.h_[b.perm_[x]] * b.h_[x];
    out.perm_[x] = a.perm_[b.perm_[x]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bisections

FullGroupElement from_bisection(const OdometerSpec& spec, std::size_t level, const BisectionForm& b) {
  if (level == 0) fail(Errc::LevelOutOfRange, "full group levels start at 1");
  const std::size_t n = materialized_size(spec.modulus(level), "bisection");
  std::vector<std::size_t> perm(n, n);
  std::vector<GroupElement> h(n);
  std::vector<bool> hit(n, false);
  for (const auto& [g, cosets] : b) {
    for (auto x : cosets) {
      if (x >= n) fail(Errc::InvalidArgument, "coset " + std::to_string(x) + " out of range");
      if (perm[x] != n) fail(Errc::NotPartition, "coset " + std::to_string(x) + " is covered twice");
      const std::size_t y = coset_index(spec, level, g, x);
      if (hit[y]) fail(Errc::NotPartition, "image coset " + std::to_string(y) + " is hit twice");
      hit[y] = true;
      perm[x] = y;
      h[x] = rep(spec.group(), y).inverse() * g * rep(spec.group(), x);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (perm[x] == n) fail(Errc::NotPartition, "coset " + std::to_string(x) + " is not covered");
  return FullGroupElement::make(spec, level, std::move(h), std::move(perm));
}

BisectionForm to_bisection(const FullGroupElement& u) {
  BisectionForm out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    const GroupElement g = u.arrow(x);
    auto it = std::find_if(out.begin(), out.end(), [&](const BisectionPair& p) { return p.g == g; });
    if (it == out.end()) out.push_back({g, {x}});
    else it->cosets.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Abelianization, I and j

IntVector AbelianClass::as_vector() const {
  IntVector v = lambda;
  v.push_back(odd ? 1 : 0);
  return v;
}

FgAbelianGroup fullgroup_abelianization(const AbelianizationChart& chart) {
  const auto& base = chart.group();
  const std::size_t g = base.generator_count();
  const IntMatrix& r = base.relations();
  IntMatrix rel(g + 1, r.cols() + 1);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < r.cols(); ++k) rel(i, k) = r(i, k);
  rel(g, r.cols()) = 2;
  return FgAbelianGroup::from_presentation(g + 1, rel);
}

AbelianClass abelianize(const OdometerSpec& spec, const FullGroupElement& u) {
  if (u.size() < 2) fail(Errc::LevelTooSmall, "abelianization needs at least two cosets");
  const AbelianizationChart chart(spec, u.level());
  IntVector sum(chart.group().generator_count(), Integer(0));
  for (const auto& h : u.h()) {
    const IntVector v = chart.coords(h);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
  }
  return {chart.reduce(std::move(sum)), odd_permutation(u.perm())};
}

IntVector index_map_I(const OdometerSpec& spec, const FullGroupElement& u) {
  return abelianize(spec, u).lambda;
}

JImage j_map(const OdometerSpec& spec, std::size_t level,
             std::optional<std::pair<GroupElement, std::size_t>> arrow) {
  const std::size_t n = materialized_size(spec.modulus(level), "j map");
  if (n < 3) fail(Errc::LevelTooSmall, "j needs at least three cosets, level has " + std::to_string(n));
  const auto [g, x0] = arrow.value_or(std::pair{GroupElement::make(spec.group(), 1), std::size_t{0}});
  if (x0 >= n) fail(Errc::InvalidArgument, "source coset out of range");
  const std::size_t y0 = coset_index(spec, level, g, x0);
  if (y0 == x0) fail(Errc::InvalidArgument, "the arrow must move its source coset");
  BisectionForm form{{g, {x0}}, {g.inverse(), {y0}}, {GroupElement::identity(spec.group()), {}}};
  for (std::size_t x = 0; x < n; ++x)
    if (x != x0 && x != y0) form.back().cosets.push_back(x);
  FullGroupElement tau = from_bisection(spec, level, form);
  AbelianClass cls = abelianize(spec, tau);
  return {std::move(tau), std::move(cls)};
}

FullGroupElement lift(const OdometerSpec& spec, const FullGroupElement& u) {
  const std::size_t next = u.level() + 1;
  const std::size_t n = materialized_size(spec.modulus(next), "lift");
  BisectionForm coarse = to_bisection(u);
  std::vector<std::size_t> group_of(u.size());
  for (std::size_t k = 0; k < coarse.size(); ++k)
    for (auto x : coarse[k].cosets) group_of[x] = k;
  BisectionForm fine;
  for (const auto& p : coarse) fine.push_back({p.g, {}});
  for (std::size_t y = 0; y < n; ++y) fine[group_of[y % u.size()]].cosets.push_back(y);
  return from_bisection(spec, next, fine);
}

// ---------------------------------------------------------------------------
// AH certificates

namespace {

struct LevelData {
  std::size_t level;
  FgAbelianGroup a, b, c;
  IntMatrix j, index;
  std::vector<FullGroupElement> b_generators;  // ζ of chart generators, then η of (0 1)
};

std::vector<std::size_t> transposition01(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[0], p[1]);
  return p;
}

IntVector unit(std::size_t size, std::size_t k) {
  IntVector v(size, Integer(0));
  v[k] = 1;
  return v;
}

// Orbit representatives of Γ on Z_n (smallest element of each orbit).
std::vector<std::size_t> orbit_representatives(const OdometerSpec& spec, std::size_t level,
                                               std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : group_generators(spec.group()))
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = find(x), b = find(coset_index(spec, level, g, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x)
    if (find(x) == x) reps.push_back(x);
  return reps;
}

LevelData level_data(const OdometerSpec& spec, std::size_t level) {
  const std::size_t n = materialized_size(spec.modulus(level), "AH certificate");
  if (n < 3) fail(Errc::LevelTooSmall, "the AH sequence needs at least three cosets, level " +
                                           std::to_string(level) + " has " + std::to_string(n));
  const AbelianizationChart chart(spec, level);
  const std::size_t gens = chart.group().generator_count();
  const auto orbits = orbit_representatives(spec, level, n);

  LevelData d{level,
              FgAbelianGroup::from_invariants(0, std::vector<Integer>(orbits.size(), Integer(2))),
              fullgroup_abelianization(chart),
              chart.group(),
              IntMatrix(gens + 1, orbits.size()),
              IntMatrix(gens, gens + 1),
              {}};

  const GroupElement step = GroupElement::make(spec.group(), 1);
  std::vector<IntVector> j_cols;
  for (auto x : orbits) j_cols.push_back(j_map(spec, level, std::pair{step, x}).cls.as_vector());
  d.j = IntMatrix::from_columns(gens + 1, j_cols);

  for (const auto& lambda : chart.generators())
    d.b_generators.push_back(FullGroupElement::zeta(spec, level, lambda));
  d.b_generators.push_back(FullGroupElement::eta(spec, level, transposition01(n)));
  std::vector<IntVector> i_cols;
  for (std::size_t k = 0; k < d.b_generators.size(); ++k) {
    const AbelianClass cls = abelianize(spec, d.b_generators[k]);
    if (cls.as_vector() != unit(gens + 1, k))
      fail(Errc::InvariantViolation, "generator " + std::to_string(k) +
                                         " of the full group abelianization is misidentified");
    i_cols.push_back(cls.lambda);
  }
  d.index = IntMatrix::from_columns(gens, i_cols);
  return d;
}

// Some s : C -> B with I s = id, by exhaustive search over a box that covers B.
std::optional<bool> search_splitting(const AbHom& index, std::size_t candidate_limit) {
  const FgAbelianGroup& b = index.domain();
  const FgAbelianGroup& c = index.codomain();
  if (!b.is_finite()) return std::nullopt;
  const auto& inv = b.invariant_factors();
  const Integer exponent = inv.empty() ? Integer(1) : inv.back();
  const std::size_t gb = b.generator_count();
  const std::size_t gc = c.generator_count();
  std::size_t e = 0;
  if (!to_size(exponent, e)) return std::nullopt;
  std::size_t total = 1;
  for (std::size_t k = 0; k < gb * gc; ++k) {
    if (total > candidate_limit / std::max<std::size_t>(e, 1)) return std::nullopt;
    total *= e;
  }
  const AbHom id = AbHom::identity(c);
  for (std::size_t code = 0; code < total; ++code) {
    IntMatrix s(gb, gc);
    std::size_t rest = code;
    for (std::size_t col = 0; col < gc; ++col)
      for (std::size_t row = 0; row < gb; ++row) {
        s(row, col) = as_integer(rest % e);
        rest /= e;
      }
    try {
      const AbHom section(c, b, s);
      if (compose(index, section).equals(id)) return true;
    } catch (const Error& err) {
      if (err.code() != Errc::NotWellDefined) throw;
    }
  }
  return std::nullopt;
}

IntMatrix compose_all(std::span<const AbHom> maps, std::size_t from, std::size_t to,
                      const FgAbelianGroup& start) {
  AbHom acc = AbHom::identity(start);
  for (std::size_t k = from; k < to; ++k) acc = compose(maps[k], acc);
  return acc.kernel_lattice();
}

}  // namespace

AhCertificate ah_certificate(const OdometerSpec& spec, std::size_t level) {
  LevelData d = level_data(spec, level);
  const AbHom j(d.a, d.b, d.j);
  const AbHom index(d.b, d.c, d.index);

  std::vector<IntVector> s_cols;
  for (std::size_t k = 0; k + 1 < d.b_generators.size(); ++k)
    s_cols.push_back(abelianize(spec, d.b_generators[k]).as_vector());
  const AbHom section(d.c, d.b, IntMatrix::from_columns(d.b.generator_count(), s_cols));

  AhCertificate cert;
  cert.level = level;
  cert.j_injective = j.is_injective();
  cert.middle_exact = check_exactness(j, index);
  cert.index_surjective = index.is_surjective();
  cert.exact = cert.j_injective && cert.middle_exact && cert.index_surjective;
  cert.split = compose(index, section).equals(AbHom::identity(d.c));
  cert.h0_tensor_z2 = d.a;
  cert.fullgroup_ab = d.b;
  cert.h1 = d.c;
  cert.j = d.j;
  cert.index_map = d.index;
  return cert;
}

AhCertificate ah_certificate_colimit(const OdometerSpec& spec, std::size_t window) {
  if (spec.group() != GroupKind::Dihedral)
    fail(Errc::WrongGroupKind, "the colimit AH certificate is implemented for the dihedral odometer");
  spec.require_tail("the colimit AH certificate");

  std::size_t first = 1;
  OdometerSpec deep = spec.deepened(std::max(spec.depth(), std::size_t{64}));
  while (deep.modulus(first) < 3) ++first;
  const std::size_t count = 2 * window + 2;
  deep = spec.deepened(std::max(spec.depth(), first + count - 1));

  std::vector<LevelData> data;
  for (std::size_t k = 0; k < count; ++k) data.push_back(level_data(deep, first + k));

  std::vector<FgAbelianGroup> as, bs, cs;
  std::vector<AbHom> a_maps, b_maps, c_maps, js, is;
  for (const auto& d : data) {
    as.push_back(d.a);
    bs.push_back(d.b);
    cs.push_back(d.c);
    js.emplace_back(d.a, d.b, d.j);
    is.emplace_back(d.b, d.c, d.index);
  }

  bool natural = true;
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const std::size_t level = first + k;
    IntMatrix a(1, 1);
    a(0, 0) = mod_floor(deep.ratio(level), 2);
    a_maps.emplace_back(as[k], as[k + 1], a);
    std::vector<IntVector> cols;
    for (const auto& u : data[k].b_generators)
      cols.push_back(abelianize(deep, lift(deep, u)).as_vector());
    b_maps.emplace_back(bs[k], bs[k + 1], IntMatrix::from_columns(bs[k + 1].generator_count(), cols));
    c_maps.push_back(transfer_map(deep, level, 1));
    natural = natural && compose(b_maps[k], js[k]).equals(compose(js[k + 1], a_maps[k])) &&
              compose(is[k + 1], b_maps[k]).equals(compose(c_maps[k], is[k]));
  }

  const std::size_t depth =
      std::max({stable_image(as, a_maps, window).depth, stable_image(bs, b_maps, window).depth,
                stable_image(cs, c_maps, window).depth});
  const std::size_t last = count - 1;
  const auto limit_of = [&](const std::vector<FgAbelianGroup>& groups, std::span<const AbHom> maps) {
    return FgAbelianGroup::from_presentation(groups[depth].generator_count(),
                                             compose_all(maps, depth, last, groups[depth]));
  };
  const FgAbelianGroup a_inf = limit_of(as, a_maps);
  const FgAbelianGroup b_inf = limit_of(bs, b_maps);
  const FgAbelianGroup c_inf = limit_of(cs, c_maps);
  const AbHom j(a_inf, b_inf, data[depth].j);
  const AbHom index(b_inf, c_inf, data[depth].index);

  AhCertificate cert;
  cert.level = std::nullopt;
  cert.natural = natural;
  cert.j_injective = j.is_injective();
  cert.middle_exact = check_exactness(j, index);
  cert.index_surjective = index.is_surjective();
  cert.exact = natural && cert.j_injective && cert.middle_exact && cert.index_surjective;
  cert.split = search_splitting(index, 1 << 16);
  cert.h0_tensor_z2 = a_inf;
  cert.fullgroup_ab = b_inf;
  cert.h1 = c_inf;
  cert.j = data[depth].j;
  cert.index_map = data[depth].index;
  cert.stabilization_depth = first + depth;
  return cert;
}

}  // namespace odo
