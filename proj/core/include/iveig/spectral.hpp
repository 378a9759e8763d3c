#pragma once

#include "iveig/types.hpp"

namespace iveig::spectral {

/// Top eigenpairs of a symmetric matrix, eigenvalues descending,
/// eigenvector columns orthonormal and sign-fixed.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
};

/// Rank-k singular factorization; singular values descending. The sign
/// convention is applied jointly to (U, V) column pairs. `requested_k`
/// records the caller's k before any rank truncation.
struct TruncatedSvd {
  Matrix u;
  Vector singular_values;
  Matrix v;
  Index requested_k = 0;
};

struct EmbeddingPair {
  Matrix ex;
  Matrix ey;
};

struct KernelPcaResult {
  Spectrum spectrum;      // always the requested k eigenpairs
  Matrix embedding;       // columns limited to the numerical rank
  Index requested_k = 0;
};

/// Top-k eigenpairs of a centered Gram matrix. Embedding coordinates are
/// eigenvectors scaled by sqrt(eigenvalue), so the embedding Gram matrix
/// approximates C at rank k. Eigenvalues at or below rank_tol * lambda_1
/// contribute no embedding column.
KernelPcaResult kernel_pca(const CenteredGram& c, Index k,
                           double rank_tol = kRankTolerance);

/// Top-k singular triplets of the explicit product C_X * C_Y. Columns
/// beyond the numerical rank (sigma <= rank_tol * sigma_1) are dropped,
/// except that a zero product keeps k all-zero triplets.
TruncatedSvd kernel_svd(const CenteredGram& cx, const CenteredGram& cy,
                        Index k, double rank_tol = kRankTolerance);

/// E_X = U sqrt(Lambda), E_Y = V sqrt(Lambda). By construction
/// E_X * E_Y^T reproduces U Lambda V^T.
EmbeddingPair embeddings_from_svd(const TruncatedSvd& svd);

/// The two-view embedding: kernel_svd followed by embeddings_from_svd.
EmbeddingPair instrumental_eigenmaps(const CenteredGram& cx,
                                     const CenteredGram& cy, Index k,
                                     double rank_tol = kRankTolerance);

struct TwoSubspacePca {
  TruncatedSvd svd;          // factors of the d_x-by-d_y cross-covariance
  EmbeddingPair embeddings;  // centered observations projected onto U, V
};

/// SVD of the centered cross-covariance (1/n) Xc^T Yc between two
/// finite-dimensional views. k beyond min(d_x, d_y) or beyond the
/// numerical rank is truncated (see TruncatedSvd::requested_k).
TwoSubspacePca two_subspace_pca(const Dataset& x, const Dataset& y, Index k,
                                double rank_tol = kRankTolerance);

}  // namespace iveig::spectral
