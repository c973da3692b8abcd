#pragma once

#include <cstddef>
#include <vector>

#include "odo/int_matrix.hpp"

namespace odo {

/// Smith normal form with the convention S = U * source * V.
///
/// U (rows x rows) and V (cols x cols) are unimodular; their inverses are
/// carried along because lattice computations (image bases, solving
/// S-systems back in the original coordinates) need them. The diagonal of S
/// is nonnegative with d_1 | d_2 | ... | d_rank and zeros after `rank`.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix source;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// The first min(rows, cols) diagonal entries of S.
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace odo
