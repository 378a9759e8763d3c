#pragma once

#include <vector>

#include "iveig/types.hpp"

namespace iveig::eigenmaps {

enum class WeightMode { Binary, Rbf };

/// Symmetric nearest-neighbor adjacency; weights are 1 or RBF values.
struct NeighborGraph {
  Matrix weights;
  int k_nn = 0;
  WeightMode mode = WeightMode::Binary;
  double bandwidth = 0.0;  // resolved value when mode == Rbf
};

struct LaplacianMatrix {
  Matrix values;
  bool normalized = false;
  Vector degrees;
};

/// k-nearest-neighbor graph, symmetrized by union (an edge exists if either
/// endpoint selects the other). Distance ties at the k-th neighbor break
/// toward the lower index; duplicate points are legal neighbors.
/// In RBF mode, bandwidth <= 0 selects the median pairwise distance.
NeighborGraph knn_graph(const Dataset& x, int k_nn, WeightMode mode,
                        double bandwidth = 0.0);

/// L = S - W, or I - S^{-1/2} W S^{-1/2} when normalized. The normalized
/// form rejects graphs with an isolated vertex.
LaplacianMatrix graph_laplacian(const NeighborGraph& w, bool normalized);

/// Connected components of the weight pattern, each sorted ascending.
std::vector<std::vector<Index>> connected_components(const Matrix& weights);

/// Gram matrix equivalent of the Laplacian embedding: the Moore-Penrose
/// pseudoinverse of L. Eigenvalues below rank_tol * lambda_max are treated
/// as zero. Requires a connected graph.
GramMatrix le_gram(const LaplacianMatrix& l, double rank_tol = kRankTolerance);

/// Embedding from eigenvectors 2..k+1 of L (ascending eigenvalues, the
/// constant-direction vector skipped). `scaled` divides column j by
/// sqrt(lambda_j). Requires a connected graph and 1 <= k <= n-1.
Matrix le_embedding(const LaplacianMatrix& l, Index k, bool scaled);

}  // namespace iveig::eigenmaps
