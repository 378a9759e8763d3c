#pragma once

#include "iveig/types.hpp"

namespace iveig::gram {

/// Gaussian RBF kernel matrix: exp(-|x_i - x_j|^2 / (2 bandwidth^2)).
/// Unit diagonal, exactly symmetric.
GramMatrix rbf_gram(const Dataset& x, double bandwidth);

/// Plain inner-product kernel matrix.
GramMatrix linear_gram(const Dataset& x);

/// Projects the mean out of both sides of a Gram matrix. Rejects inputs
/// that are asymmetric beyond 1e-12 relative to the largest entry.
CenteredGram center(const GramMatrix& g);

/// Median of all pairwise Euclidean distances; the default RBF bandwidth.
/// Requires n >= 2 and at least two distinct points.
double median_bandwidth(const Dataset& x);

}  // namespace iveig::gram
