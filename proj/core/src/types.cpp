#include "iveig/types.hpp"

#include <cmath>

namespace iveig {

std::string KernelId::label() const {
  switch (kind) {
    case KernelKind::Rbf:
      return "rbf";
    case KernelKind::Linear:
      return "linear";
    case KernelKind::Le:
      return "le";
    case KernelKind::LeNormalized:
      return "le_normalized";
  }
  return "unknown";
}

void require_finite(const Matrix& m, const std::string& what) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j))) {
        throw std::invalid_argument(what + ": non-finite value at row " +
                                    std::to_string(i) + ", column " +
                                    std::to_string(j));
      }
    }
  }
}

void require_valid(const Dataset& x, const std::string& what) {
  if (x.n() < 1 || x.dim() < 1) {
    throw std::invalid_argument(what + ": dataset must have n >= 1 and d >= 1");
  }
  require_finite(x.points, what);
}

}  // namespace iveig
