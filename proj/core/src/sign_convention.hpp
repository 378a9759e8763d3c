#pragma once

#include <cmath>

#include "iveig/types.hpp"

// Column sign convention for eigenvectors and singular vectors: flip so the
// entry of largest absolute value is positive; the lowest index wins ties.
// For singular-vector pairs the decision comes from the left column and is
// applied to both sides.

namespace iveig::detail {

inline bool column_needs_flip(const Matrix& m, Index col) {
  double best = 0.0;
  double sign = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    const double a = std::abs(m(i, col));
    if (a > best) {
      best = a;
      sign = m(i, col);
    }
  }
  return sign < 0.0;
}

inline void fix_sign_columns(Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    if (column_needs_flip(m, j)) m.col(j) = -m.col(j);
  }
}

inline void fix_sign_pairs(Matrix& u, Matrix& v) {
  for (Index j = 0; j < u.cols(); ++j) {
    if (column_needs_flip(u, j)) {
      u.col(j) = -u.col(j);
      v.col(j) = -v.col(j);
    }
  }
}

}  // namespace iveig::detail
