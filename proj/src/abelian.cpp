#include "odo/abelian.hpp"

#include <utility>

#include "odo/error.hpp"

namespace odo {

IntMatrix image_basis(const IntMatrix& a) {
  if (a.cols() == 0) return IntMatrix(a.rows(), 0);
  const SmithDecomposition snf = smith_normal_form(a);
  // a = U^-1 S V^-1, so colspan(a) = U^-1 colspan(S).
  IntMatrix basis(a.rows(), snf.rank);
  for (std::size_t k = 0; k < snf.rank; ++k)
    for (std::size_t r = 0; r < a.rows(); ++r) basis(r, k) = snf.u_inv(r, k) * snf.s(k, k);
  return basis;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  const SmithDecomposition snf = smith_normal_form(a);
  return snf.v.block_columns(snf.rank, a.cols() - snf.rank);
}

std::optional<IntVector> solve(const SmithDecomposition& snf, std::span<const Integer> v) {
  const IntMatrix& a = snf.source;
  if (v.size() != a.rows()) fail(Errc::InvalidArgument, "solve: dimension mismatch");
  IntVector y = snf.u.apply(v);
  IntVector z(a.cols());
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (k < snf.rank) {
      if (!divides(snf.s(k, k), y[k])) return std::nullopt;
      z[k] = y[k] / snf.s(k, k);
    } else if (y[k] != 0) {
      return std::nullopt;
    }
  }
  return snf.v.apply(z);
}

bool lattice_contains(const IntMatrix& outer, const IntMatrix& inner) {
  if (outer.rows() != inner.rows()) fail(Errc::InvalidArgument, "lattice dimension mismatch");
  if (inner.cols() == 0) return true;
  if (outer.cols() == 0) return inner.is_zero();
  const SmithDecomposition snf = smith_normal_form(outer);
  for (std::size_t c = 0; c < inner.cols(); ++c)
    if (!solve(snf, inner.column(c))) return false;
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

// ---------------------------------------------------------------------------

FgAbelianGroup::FgAbelianGroup()
    : snf_(std::make_shared<const SmithDecomposition>(smith_normal_form(IntMatrix(0, 0)))) {}

FgAbelianGroup FgAbelianGroup::from_presentation(std::size_t generators, IntMatrix relations) {
  if (relations.rows() != generators)
    fail(Errc::InvalidArgument, "relation matrix must have one row per generator");
  FgAbelianGroup g;
  g.generators_ = generators;
  g.relations_ = std::move(relations);
  g.snf_ = std::make_shared<const SmithDecomposition>(smith_normal_form(g.relations_));
  g.free_rank_ = generators - g.snf_->rank;
  g.torsion_.clear();
  for (std::size_t k = 0; k < g.snf_->rank; ++k)
    if (g.snf_->s(k, k) != 1) g.torsion_.push_back(g.snf_->s(k, k));
  return g;
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t free_rank, std::vector<Integer> torsion) {
  std::vector<Integer> kept;
  for (auto& d : torsion) {
    Integer a = abs(d);
    if (a == 0) ++free_rank;
    else if (a != 1) kept.push_back(std::move(a));
  }
  const std::size_t gens = free_rank + kept.size();
  IntMatrix rel(gens, kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) rel(free_rank + k, k) = kept[k];
  return from_presentation(gens, std::move(rel));
}

Integer FgAbelianGroup::order() const {
  if (!is_finite()) fail(Errc::InvalidArgument, "order of an infinite group");
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

bool FgAbelianGroup::is_zero_element(std::span<const Integer> v) const {
  if (v.size() != generators_) fail(Errc::InvalidArgument, "element has wrong length");
  return solve(*snf_, v).has_value();
}

bool FgAbelianGroup::same_presentation(const FgAbelianGroup& other) const {
  return generators_ == other.generators_ && lattice_equal(relations_, other.relations_);
}

// ---------------------------------------------------------------------------

AbHom::AbHom(FgAbelianGroup domain, FgAbelianGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() || matrix_.cols() != domain_.generator_count())
    fail(Errc::DomainMismatch, "homomorphism matrix does not match (co)domain generators");
  const IntMatrix image_of_relations = matrix_ * domain_.relations();
  for (std::size_t c = 0; c < image_of_relations.cols(); ++c)
    if (!codomain_.is_zero_element(image_of_relations.column(c)))
      fail(Errc::NotWellDefined, "homomorphism does not respect the domain relations");
}

AbHom AbHom::identity(const FgAbelianGroup& g) {
  return AbHom(g, g, IntMatrix::identity(g.generator_count()));
}

AbHom AbHom::zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain) {
  return AbHom(domain, codomain, IntMatrix(codomain.generator_count(), domain.generator_count()));
}

IntMatrix AbHom::kernel_lattice() const {
  const std::size_t n = domain_.generator_count();
  const IntMatrix joint = matrix_.hconcat(codomain_.relations());
  const IntMatrix k = kernel_basis(joint);
  IntMatrix out(n, k.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) out(r, c) = k(r, c);
  return out;
}

IntMatrix AbHom::image_lattice() const { return matrix_.hconcat(codomain_.relations()); }

FgAbelianGroup AbHom::kernel() const {
  return lattice_quotient(kernel_lattice(), domain_.relations());
}

FgAbelianGroup AbHom::image() const {
  return lattice_quotient(image_lattice(), codomain_.relations());
}

bool AbHom::is_injective() const {
  return lattice_contains(domain_.relations(), kernel_lattice());
}

bool AbHom::is_surjective() const {
  return lattice_contains(image_lattice(), IntMatrix::identity(codomain_.generator_count()));
}

bool AbHom::is_zero() const {
  for (std::size_t c = 0; c < matrix_.cols(); ++c)
    if (!codomain_.is_zero_element(matrix_.column(c))) return false;
  return true;
}

bool AbHom::equals(const AbHom& other) const {
  if (!domain_.same_presentation(other.domain_) || !codomain_.same_presentation(other.codomain_))
    return false;
  const IntMatrix diff = matrix_ - other.matrix_;
  for (std::size_t c = 0; c < diff.cols(); ++c)
    if (!codomain_.is_zero_element(diff.column(c))) return false;
  return true;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!f.codomain().same_presentation(g.domain()))
    fail(Errc::DomainMismatch, "compose: codomain of f is not the domain of g");
  return AbHom(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

FgAbelianGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  const IntMatrix basis = image_basis(outer);
  const std::size_t r = basis.cols();
  IntMatrix coords(r, inner.cols());
  if (inner.cols() > 0) {
    if (r == 0) {
      if (!inner.is_zero()) fail(Errc::ImageNotContained, "sublattice not contained");
    } else {
      const SmithDecomposition snf = smith_normal_form(basis);
      for (std::size_t c = 0; c < inner.cols(); ++c) {
        auto y = solve(snf, inner.column(c));
        if (!y) fail(Errc::ImageNotContained, "sublattice not contained");
        for (std::size_t k = 0; k < r; ++k) coords(k, c) = (*y)[k];
      }
    }
  }
  return FgAbelianGroup::from_presentation(r, std::move(coords));
}

FgAbelianGroup subquotient(const AbHom& kernel_of, const AbHom& image_of) {
  if (!image_of.codomain().same_presentation(kernel_of.domain()))
    fail(Errc::DomainMismatch, "subquotient: image map does not land in the kernel map's domain");
  return lattice_quotient(kernel_of.kernel_lattice(), image_of.image_lattice());
}

bool check_exactness(const AbHom& f, const AbHom& g) {
  if (!f.codomain().same_presentation(g.domain()))
    fail(Errc::DomainMismatch, "check_exactness: f.codomain differs from g.domain");
  return lattice_equal(f.image_lattice(), g.kernel_lattice());
}

}  // namespace odo
