#include "odo/groupoid.hpp"

#include "odo/error.hpp"

namespace odo {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::size_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != order_ * order_)
    fail(Errc::InvalidArgument, "multiplication table has the wrong size");
  for (auto v : table_)
    if (v >= order_) fail(Errc::InvalidArgument, "multiplication table is not closed");
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(Errc::InvalidArgument, "multiplication is not associative");
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail(Errc::InvalidArgument, "no identity element");
  inverse_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
  for (auto v : inverse_)
    if (v == order_) fail(Errc::InvalidArgument, "an element has no inverse");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(t));
}

FiniteGroupoid::FiniteGroupoid(FiniteGroup group, std::size_t points, std::vector<std::size_t> action)
    : group_(std::move(group)), points_(points), action_(std::move(action)) {
  if (points_ == 0) fail(Errc::InvalidArgument, "groupoid needs at least one point");
  if (action_.size() != group_.order() * points_)
    fail(Errc::InvalidArgument, "action table has the wrong size");
  for (auto v : action_)
    if (v >= points_) fail(Errc::InvalidArgument, "action leaves the space");
  for (std::size_t x = 0; x < points_; ++x) {
    if (act(group_.identity(), x) != x) fail(Errc::InvalidArgument, "identity law fails");
    for (std::size_t g = 0; g < group_.order(); ++g)
      for (std::size_t h = 0; h < group_.order(); ++h)
        if (act(group_.mul(g, h), x) != act(g, act(h, x)))
          fail(Errc::InvalidArgument, "action law fails");
  }
}

FiniteGroupoid FiniteGroupoid::negation(std::size_t n) {
  std::vector<std::size_t> action(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    action[x] = x;
    action[n + x] = (n - x) % n;
  }
  return FiniteGroupoid(FiniteGroup::cyclic(2), n, std::move(action));
}

namespace {

bool checked_count(const FiniteGroupoid& g, std::size_t n, std::size_t budget, std::size_t& out) {
  out = g.points();
  for (std::size_t k = 0; k < n; ++k) {
    if (out > budget / g.group().order()) return false;
    out *= g.group().order();
  }
  return out <= budget;
}

// A composable tuple as (g_1, ..., g_n; x).
struct Tuple {
  std::vector<std::size_t> g;
  std::size_t x;
};

Tuple decode(const FiniteGroupoid& gd, std::size_t n, std::size_t index) {
  Tuple t{std::vector<std::size_t>(n), index % gd.points()};
  index /= gd.points();
  for (std::size_t k = n; k-- > 0;) {
    t.g[k] = index % gd.group().order();
    index /= gd.group().order();
  }
  return t;
}

std::size_t encode(const FiniteGroupoid& gd, const Tuple& t) {
  std::size_t index = 0;
  for (auto g : t.g) index = index * gd.group().order() + g;
  return index * gd.points() + t.x;
}

}  // namespace

std::size_t composable_count(const FiniteGroupoid& g, std::size_t n) {
  std::size_t out = 0;
  if (!checked_count(g, n, static_cast<std::size_t>(-1), out))
    fail(Errc::BudgetExceeded, "tuple count overflows");
  return out;
}

IntMatrix groupoid_boundary(const FiniteGroupoid& gd, std::size_t n, std::size_t budget) {
  if (n == 0) fail(Errc::InvalidArgument, "boundary maps start in degree 1");
  std::size_t cols = 0;
  if (!checked_count(gd, n, budget, cols))
    fail(Errc::BudgetExceeded, "G^(" + std::to_string(n) + ") exceeds the chain budget");
  const std::size_t rows = composable_count(gd, n - 1);
  IntMatrix d(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const Tuple t = decode(gd, n, c);
    for (std::size_t i = 0; i <= n; ++i) {
      Tuple face{{}, t.x};
      if (n == 1) {
        face.x = i == 0 ? t.x : gd.act(t.g[0], t.x);
      } else if (i == 0) {
        face.g.assign(t.g.begin() + 1, t.g.end());
      } else if (i == n) {
        face.g.assign(t.g.begin(), t.g.end() - 1);
        face.x = gd.act(t.g[n - 1], t.x);
      } else {
        face.g = t.g;
        face.g[i - 1] = gd.group().mul(t.g[i - 1], t.g[i]);
        face.g.erase(face.g.begin() + static_cast<std::ptrdiff_t>(i));
      }
      d(encode(gd, face), c) += i % 2 == 0 ? 1 : -1;
    }
  }
  return d;
}

FgAbelianGroup groupoid_chain_homology(const FiniteGroupoid& gd, std::size_t n, std::size_t budget) {
  std::size_t top = 0;
  if (!checked_count(gd, n + 1, budget, top))
    fail(Errc::BudgetExceeded, "chain complex through degree " + std::to_string(n + 1) +
                                   " exceeds the budget of " + std::to_string(budget));
  const IntMatrix up = groupoid_boundary(gd, n + 1, budget);
  if (n == 0) return FgAbelianGroup::cokernel(up);
  const IntMatrix down = groupoid_boundary(gd, n, budget);
  const AbHom d_n(FgAbelianGroup::free(down.cols()), FgAbelianGroup::free(down.rows()), down);
  const AbHom d_up(FgAbelianGroup::free(up.cols()), FgAbelianGroup::free(up.rows()), up);
  return subquotient(d_n, d_up);
}

}  // namespace odo
