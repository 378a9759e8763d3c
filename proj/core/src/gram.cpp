#include "iveig/gram.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace iveig::gram {

GramMatrix rbf_gram(const Dataset& x, double bandwidth) {
  require_valid(x, "rbf_gram");
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("rbf_gram: bandwidth must be positive");
  }
  const Matrix& p = x.points;
  const Index n = p.rows();
  const double scale = -1.0 / (2.0 * bandwidth * bandwidth);
  Matrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) {
      const double d2 = (p.row(i) - p.row(j)).squaredNorm();
      const double v = std::exp(scale * d2);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return {std::move(g), KernelId::rbf(bandwidth)};
}

GramMatrix linear_gram(const Dataset& x) {
  require_valid(x, "linear_gram");
  Matrix g = x.points * x.points.transpose();
  g = ((g + g.transpose()) * 0.5).eval();
  return {std::move(g), KernelId::linear()};
}

CenteredGram center(const GramMatrix& g) {
  const Matrix& v = g.values;
  if (v.rows() != v.cols()) {
    throw std::invalid_argument("center: Gram matrix must be square");
  }
  require_finite(v, "center");
  const double scale = v.cwiseAbs().maxCoeff();
  const double asym = (v - v.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("center: input asymmetric beyond tolerance");
  }
  // Rank-one update form of H*G*H; the explicit centering matrix appears
  // only in test oracles.
  const Matrix sym = (v + v.transpose()) * 0.5;
  const Vector row_means = sym.rowwise().mean();
  const double grand_mean = row_means.mean();
  Matrix c = sym;
  c.colwise() -= row_means;
  c.rowwise() -= row_means.transpose();
  c.array() += grand_mean;
  c = ((c + c.transpose()) * 0.5).eval();
  return {std::move(c), g.kernel};
}

double median_bandwidth(const Dataset& x) {
  require_valid(x, "median_bandwidth");
  const Index n = x.n();
  if (n < 2) {
    throw std::invalid_argument("median_bandwidth: need at least two points");
  }
  std::vector<double> dists;
  dists.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      dists.push_back((x.points.row(i) - x.points.row(j)).norm());
  if (*std::max_element(dists.begin(), dists.end()) == 0.0) {
    throw std::domain_error("median_bandwidth: all points identical");
  }
  const size_t m = dists.size();
  auto mid = dists.begin() + static_cast<std::ptrdiff_t>(m / 2);
  std::nth_element(dists.begin(), mid, dists.end());
  if (m % 2 == 1) return *mid;
  const double hi = *mid;
  std::nth_element(dists.begin(), mid - 1, mid);
  return 0.5 * (*(mid - 1) + hi);
}

}  // namespace iveig::gram
