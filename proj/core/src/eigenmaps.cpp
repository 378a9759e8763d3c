#include "iveig/eigenmaps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "dense_linalg.hpp"
#include "iveig/gram.hpp"
#include "sign_convention.hpp"

namespace iveig::eigenmaps {

NeighborGraph knn_graph(const Dataset& x, int k_nn, WeightMode mode,
                        double bandwidth) {
  require_valid(x, "knn_graph");
  const Index n = x.n();
  if (k_nn < 1 || k_nn >= n) {
    throw std::invalid_argument("knn_graph: need 1 <= k_nn < n, got k_nn=" +
                                std::to_string(k_nn) + " with n=" +
                                std::to_string(n));
  }
  double bw = bandwidth;
  if (mode == WeightMode::Rbf && bw <= 0.0) {
    bw = gram::median_bandwidth(x);
  }

  Matrix d2(n, n);
  for (Index i = 0; i < n; ++i) {
    d2(i, i) = 0.0;
    for (Index j = i + 1; j < n; ++j) {
      const double v = (x.points.row(i) - x.points.row(j)).squaredNorm();
      d2(i, j) = v;
      d2(j, i) = v;
    }
  }

  NeighborGraph g;
  g.weights = Matrix::Zero(n, n);
  g.k_nn = k_nn;
  g.mode = mode;
  g.bandwidth = (mode == WeightMode::Rbf) ? bw : 0.0;

  std::vector<Index> order(static_cast<size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    Index m = 0;
    for (Index j = 0; j < n; ++j)
      if (j != i) order[static_cast<size_t>(m++)] = j;
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
      if (d2(i, a) != d2(i, b)) return d2(i, a) < d2(i, b);
      return a < b;
    });
    for (int r = 0; r < k_nn; ++r) {
      const Index j = order[static_cast<size_t>(r)];
      const double w = (mode == WeightMode::Binary)
                           ? 1.0
                           : std::exp(-d2(i, j) / (2.0 * bw * bw));
      g.weights(i, j) = w;
      g.weights(j, i) = w;  // union symmetrization
    }
  }
  return g;
}

LaplacianMatrix graph_laplacian(const NeighborGraph& w, bool normalized) {
  const Matrix& weights = w.weights;
  const Index n = weights.rows();
  LaplacianMatrix l;
  l.normalized = normalized;
  l.degrees = weights.rowwise().sum();
  if (!normalized) {
    l.values = Matrix(l.degrees.asDiagonal());
    l.values -= weights;
    return l;
  }
  for (Index i = 0; i < n; ++i) {
    if (l.degrees(i) <= 0.0) {
      throw std::domain_error(
          "graph_laplacian: vertex " + std::to_string(i) +
          " is isolated; the normalized Laplacian is undefined");
    }
  }
  const Vector inv_sqrt = l.degrees.array().rsqrt();
  l.values = Matrix::Identity(n, n) -
             (inv_sqrt.asDiagonal() * weights * inv_sqrt.asDiagonal());
  l.values = ((l.values + l.values.transpose()) * 0.5).eval();
  return l;
}

std::vector<std::vector<Index>> connected_components(const Matrix& weights) {
  const Index n = weights.rows();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::vector<Index>> out;
  std::vector<Index> stack;
  for (Index s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    stack.push_back(s);
    comp[static_cast<size_t>(s)] = id;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      out[static_cast<size_t>(id)].push_back(v);
      for (Index j = 0; j < n; ++j) {
        if (j != v && weights(v, j) != 0.0 && comp[static_cast<size_t>(j)] < 0) {
          comp[static_cast<size_t>(j)] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

// Off-diagonal pattern of L matches the weight pattern (weights are
// positive, so no cancellation).
void require_connected(const LaplacianMatrix& l, const std::string& what) {
  const Index n = l.values.rows();
  Matrix pattern = l.values;
  pattern.diagonal().setZero();
  auto comps = connected_components(pattern);
  if (comps.size() > 1) {
    std::string sizes;
    for (const auto& c : comps) {
      if (!sizes.empty()) sizes += ", ";
      sizes += std::to_string(c.size());
    }
    throw std::domain_error(what + ": graph is disconnected (" +
                            std::to_string(comps.size()) +
                            " components of sizes " + sizes + " out of " +
                            std::to_string(n) + " vertices)");
  }
}

}  // namespace

GramMatrix le_gram(const LaplacianMatrix& l, double rank_tol) {
  require_connected(l, "le_gram");
  detail::SymEig eig = detail::sym_eig_full(l.values);
  const double lambda_max = eig.values(eig.values.size() - 1);
  const double cut = rank_tol * std::max(lambda_max, 0.0);
  Vector inv = Vector::Zero(eig.values.size());
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cut) inv(i) = 1.0 / eig.values(i);
  }
  Matrix g = detail::matmul(eig.vectors * inv.asDiagonal(),
                            eig.vectors.transpose());
  g = ((g + g.transpose()) * 0.5).eval();
  return {std::move(g),
          l.normalized ? KernelId::le_normalized() : KernelId::le()};
}

Matrix le_embedding(const LaplacianMatrix& l, Index k, bool scaled) {
  const Index n = l.values.rows();
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("le_embedding: need 1 <= k <= n-1, got k=" +
                                std::to_string(k));
  }
  require_connected(l, "le_embedding");
  detail::SymEig eig = detail::sym_eig_smallest(l.values, k + 1);
  Matrix e = eig.vectors.rightCols(k);
  if (scaled) {
    // Gershgorin bound stands in for lambda_max; only a guard against
    // dividing by a numerically-zero eigenvalue.
    const double bound = l.values.cwiseAbs().rowwise().sum().maxCoeff();
    for (Index j = 0; j < k; ++j) {
      const double lambda = eig.values(j + 1);
      if (lambda <= kRankTolerance * bound) {
        throw std::domain_error(
            "le_embedding: eigenvalue " + std::to_string(j + 2) +
            " is numerically zero; scaled embedding undefined");
      }
      e.col(j) /= std::sqrt(lambda);
    }
  }
  detail::fix_sign_columns(e);
  return e;
}

}  // namespace iveig::eigenmaps
