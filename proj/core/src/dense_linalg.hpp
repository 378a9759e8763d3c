#pragma once

#include "iveig/types.hpp"

// Internal LAPACK/BLAS backend. Everything here is deterministic for fixed
// inputs and a fixed thread count. Matrices are column-major (Eigen default),
// matching LAPACK_COL_MAJOR.

namespace iveig::detail {

struct SymEig {
  Vector values;   // ascending
  Matrix vectors;  // columns match values
};

/// Full eigendecomposition of a symmetric matrix (dsyevd).
SymEig sym_eig_full(const Matrix& a);

/// The `count` smallest eigenpairs, ascending (dsyevr, index range).
SymEig sym_eig_smallest(const Matrix& a, Index count);

/// The `count` largest eigenpairs, returned in DESCENDING order.
SymEig sym_eig_largest(const Matrix& a, Index count);

struct SvdResult {
  Matrix u;
  Vector s;  // descending, nonnegative
  Matrix v;
};

/// Top `count` singular triplets of a general matrix (dgesvdx).
SvdResult svd_top(const Matrix& a, Index count);

/// a * b through dgemm.
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace iveig::detail
