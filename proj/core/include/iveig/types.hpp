#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace iveig {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Index = Eigen::Index;

/// Default relative cutoff below which eigen/singular values count as zero.
inline constexpr double kRankTolerance = 1e-9;

enum class KernelKind { Rbf, Linear, Le, LeNormalized };

/// Tag identifying how a Gram matrix was built. `bandwidth` is meaningful
/// for the RBF kernel only.
struct KernelId {
  KernelKind kind = KernelKind::Linear;
  double bandwidth = 0.0;

  static KernelId rbf(double bandwidth) { return {KernelKind::Rbf, bandwidth}; }
  static KernelId linear() { return {KernelKind::Linear, 0.0}; }
  static KernelId le() { return {KernelKind::Le, 0.0}; }
  static KernelId le_normalized() { return {KernelKind::LeNormalized, 0.0}; }

  std::string label() const;
};

/// A point cloud; rows are observations, columns are coordinates.
struct Dataset {
  Matrix points;

  Index n() const { return points.rows(); }
  Index dim() const { return points.cols(); }
};

/// Pairwise kernel evaluations over one dataset.
struct GramMatrix {
  Matrix values;
  KernelId kernel;
};

/// Gram matrix with the mean direction projected out (both sides).
struct CenteredGram {
  Matrix values;
  KernelId kernel;
};

/// Throws std::invalid_argument naming the first non-finite coordinate.
void require_finite(const Matrix& m, const std::string& what);

/// Validates the Dataset invariants (finite, n >= 1, d >= 1).
void require_valid(const Dataset& x, const std::string& what);

}  // namespace iveig
