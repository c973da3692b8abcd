#include "odo/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace odo {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

/// Elimination state; every elementary operation on `a` is mirrored on the
/// transforms so that u * source * v == a holds after each step.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& source)
      : a_(source),
        u_(IntMatrix::identity(source.rows())),
        u_inv_(IntMatrix::identity(source.rows())),
        v_(IntMatrix::identity(source.cols())),
        v_inv_(IntMatrix::identity(source.cols())) {}

  SmithDecomposition run(const IntMatrix& source) {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      move_to(*pivot, t);
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.rank = t;
    out.s = std::move(a_);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(u_inv_);
    out.v_inv = std::move(v_inv_);
    out.source = source;
    return out;
  }

 private:
  std::optional<Position> smallest_in_block(std::size_t t) const {
    std::optional<Position> best;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Integer& x = a_(r, c);
        if (x == 0) continue;
        if (!best || abs_less(x, a_(best->row, best->col))) {
          best = Position{r, c};
          if (x == 1 || x == -1) return best;
        }
      }
    return best;
  }

  void move_to(Position p, std::size_t t) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  // Clears row t and column t, then enforces that a(t,t) divides the
  // remaining block.
  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool residue = false;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(r, t, -q);
        if (a_(r, t) != 0) residue = true;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(c, t, -q);
        if (a_(t, c) != 0) residue = true;
      }
      if (residue) {
        // A remainder is strictly smaller than the pivot; promote it.
        Position best{t, t};
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
          if (a_(r, t) != 0 && abs_less(a_(r, t), a_(best.row, best.col))) best = {r, t};
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (a_(t, c) != 0 && abs_less(a_(t, c), a_(best.row, best.col))) best = {t, c};
        move_to(best, t);
        continue;
      }
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < a_.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (!divides(a_(t, t), a_(r, c))) {
            offending = r;
            break;
          }
      if (!offending) return;
      add_row(t, *offending, 1);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_cols(a, b);
    v_.swap_cols(a, b);
    v_inv_.swap_rows(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    a_.add_row_multiple(dst, src, f);
    u_.add_row_multiple(dst, src, f);
    u_inv_.add_col_multiple(src, dst, -f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    a_.add_col_multiple(dst, src, f);
    v_.add_col_multiple(dst, src, f);
    v_inv_.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    a_.negate_row(r);
    u_.negate_row(r);
    u_inv_.negate_col(r);
  }

  IntMatrix a_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  return Reducer(a).run(a);
}

}  // namespace odo
