#include "odo/homology.hpp"

#include <algorithm>

#include "odo/colimit.hpp"
#include "odo/error.hpp"

namespace odo {

// ---------------------------------------------------------------------------
// Z_2-modules

InvolutionModule::InvolutionModule(std::vector<std::size_t> sigma) : sigma_(std::move(sigma)) {
  for (std::size_t y = 0; y < sigma_.size(); ++y) {
    if (sigma_[y] >= sigma_.size()) fail(Errc::InvalidArgument, "involution maps outside the base set");
    if (sigma_[sigma_[y]] != y) fail(Errc::InvalidArgument, "sigma is not an involution");
  }
}

InvolutionModule InvolutionModule::negation(std::size_t n) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t y = 0; y < n; ++y) sigma[y] = (n - y) % n;
  return InvolutionModule(std::move(sigma));
}

std::size_t InvolutionModule::fixed_point_count() const {
  std::size_t c = 0;
  for (std::size_t y = 0; y < sigma_.size(); ++y) c += sigma_[y] == y;
  return c;
}

namespace {

// 1 + sign * σ_* on Z^Y.
IntMatrix one_plus(const InvolutionModule& m, int sign) {
  IntMatrix a = IntMatrix::identity(m.size());
  for (std::size_t y = 0; y < m.size(); ++y) a(m.sigma()[y], y) += sign;
  return a;
}

}  // namespace

FgAbelianGroup z2_homology(const InvolutionModule& m, std::size_t degree) {
  const IntMatrix minus = one_plus(m, -1);
  if (degree == 0) return FgAbelianGroup::cokernel(minus);
  const IntMatrix plus = one_plus(m, 1);
  const FgAbelianGroup z = FgAbelianGroup::free(m.size());
  const AbHom d_minus(z, z, minus);
  const AbHom d_plus(z, z, plus);
  return degree % 2 == 1 ? subquotient(d_minus, d_plus) : subquotient(d_plus, d_minus);
}

// ---------------------------------------------------------------------------
// Transfer

AbHom transfer_between(const OdometerSpec& spec, std::size_t from, std::size_t to,
                       std::size_t degree,
                       const std::optional<std::vector<GroupElement>>& transversal) {
  if (to <= from) fail(Errc::LevelOutOfRange, "transfer goes from a level to a deeper one");
  const Integer index = spec.modulus(to) / spec.modulus(from);
  if (degree == 0) {
    const auto z = FgAbelianGroup::free(1);
    IntMatrix m(1, 1);
    m(0, 0) = index;
    return AbHom(z, z, m);
  }
  if (degree != 1) fail(Errc::InvalidArgument, "transfer is implemented in degrees 0 and 1");

  const AbelianizationChart source(spec, from);
  const AbelianizationChart target(spec, to);
  const auto reps = transversal ? *transversal : canonical_transversal(spec, from, to);
  std::vector<IntVector> columns;
  for (const auto& g : source.generators()) {
    const CocycleData c = relative_cocycle(spec, from, to, g, reps);
    IntVector sum(target.group().generator_count(), Integer(0));
    for (const auto& h : c.h) {
      const IntVector v = target.coords(h);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
    }
    columns.push_back(target.reduce(std::move(sum)));
  }
  return AbHom(source.group(), target.group(), IntMatrix::from_columns(target.group().generator_count(), columns));
}

AbHom transfer_map(const OdometerSpec& spec, std::size_t level, std::size_t degree) {
  if (level + 1 > spec.depth())
    fail(Errc::LevelOutOfRange, "transfer from level " + std::to_string(level) + " needs level " +
                                    std::to_string(level + 1) + " within depth " +
                                    std::to_string(spec.depth()));
  return transfer_between(spec, level, level + 1, degree);
}

// ---------------------------------------------------------------------------
// Odometer homology

SupernaturalNumber index_supernatural(const OdometerSpec& spec) {
  const std::size_t listed =
      spec.chain().kind == ChainSpec::Kind::Explicit ? spec.chain().terms.size() : 1;
  const OdometerSpec s = spec.depth() >= listed ? spec : spec.deepened(listed);
  std::vector<Integer> multipliers{s.modulus(1)};
  for (std::size_t i = 1; i < listed; ++i) multipliers.push_back(s.ratio(i));
  return std::get<Rank1Colimit>(colimit_rank1(multipliers, spec.tail())).supernatural;
}

HomologyReport odometer_homology(const OdometerSpec& spec, std::size_t max_degree,
                                 std::size_t window) {
  if (spec.group() == GroupKind::DirectProduct)
    fail(Errc::WrongGroupKind, "odometer homology is computed for the Z and dihedral kinds");
  spec.require_tail("odometer homology");
  if (window == 0) fail(Errc::InvalidArgument, "window must be positive");

  HomologyReport report;
  report.max_degree = max_degree;
  report.degrees[0] = GroupValue::of_rank1(index_supernatural(spec));
  if (max_degree == 0) return report;

  const std::size_t levels = std::max(spec.depth(), 2 * window + 2);
  const OdometerSpec deep = spec.deepened(levels);

  if (spec.group() == GroupKind::Z) {
    std::vector<Integer> multipliers;
    for (std::size_t i = 1; i < levels; ++i) {
      const AbHom t = transfer_map(deep, i, 1);
      multipliers.push_back(abs(t.matrix()(0, 0)));
    }
    const AbHom tail = transfer_between(deep.deepened(levels + 1), levels, levels + 1, 1);
    const auto colim = colimit_rank1(multipliers, Tail::geometric(abs(tail.matrix()(0, 0))));
    const auto& s = std::get<Rank1Colimit>(colim).supernatural;
    report.degrees[1] = s.infinite_primes().empty() ? GroupValue::of(FgAbelianGroup::free(1))
                                                    : GroupValue::of_rank1(s);
    for (std::size_t n = 2; n <= max_degree; ++n) report.degrees[n] = GroupValue::of({});
    return report;
  }

  std::vector<FgAbelianGroup> groups;
  std::vector<AbHom> maps;
  for (std::size_t i = 1; i <= levels; ++i) {
    groups.push_back(AbelianizationChart(deep, i).group());
    if (i < levels) maps.push_back(transfer_map(deep, i, 1));
  }
  const ColimitResult h1 = colimit_finite(groups, maps, window);
  if (const auto* f = std::get_if<FiniteColimit>(&h1)) {
    report.degrees[1] = GroupValue::of(f->group);
    report.h1_stabilization_depth = f->stabilization_depth;
  } else {
    report.degrees[1] = GroupValue::of({});
  }

  const auto [m01, m11] = dihedral_fixed_counts(spec);
  std::size_t r = 0;
  if (!to_size(m01 + m11, r)) fail(Errc::InvariantViolation, "fixed-point count out of range");
  const auto odd = FgAbelianGroup::from_invariants(0, std::vector<Integer>(r, Integer(2)));
  for (std::size_t n = 2; n <= max_degree; ++n)
    report.degrees[n] = n % 2 == 0 ? GroupValue::of({}) : GroupValue::of(odd);
  return report;
}

}  // namespace odo
