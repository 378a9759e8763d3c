#include "dense_linalg.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <stdexcept>
#include <vector>

namespace iveig::detail {

namespace {

[[noreturn]] void lapack_failure(const char* routine, int info) {
  throw std::runtime_error(std::string(routine) + " failed with info=" +
                           std::to_string(info));
}

}  // namespace

SymEig sym_eig_full(const Matrix& a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SymEig out;
  out.vectors = a;
  out.values.resize(n);
  const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                  out.vectors.data(), n, out.values.data());
  if (info != 0) lapack_failure("dsyevd", info);
  return out;
}

static SymEig sym_eig_range(const Matrix& a, lapack_int il, lapack_int iu) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  const lapack_int want = iu - il + 1;
  Matrix work = a;
  SymEig out;
  out.values.resize(want);
  out.vectors.resize(n, want);
  std::vector<lapack_int> isuppz(static_cast<size_t>(2 * want));
  lapack_int found = 0;
  const int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n,
                                  work.data(), n, 0.0, 0.0, il, iu, 0.0,
                                  &found, out.values.data(), out.vectors.data(),
                                  n, isuppz.data());
  if (info != 0) lapack_failure("dsyevr", info);
  if (found != want) lapack_failure("dsyevr (eigenvalue count)", found);
  return out;
}

SymEig sym_eig_smallest(const Matrix& a, Index count) {
  return sym_eig_range(a, 1, static_cast<lapack_int>(count));
}

SymEig sym_eig_largest(const Matrix& a, Index count) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SymEig asc = sym_eig_range(a, n - static_cast<lapack_int>(count) + 1, n);
  SymEig out;
  out.values = asc.values.reverse();
  out.vectors = asc.vectors.rowwise().reverse();
  return out;
}

SvdResult svd_top(const Matrix& a, Index count) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = static_cast<lapack_int>(count);
  Matrix work = a;
  SvdResult out;
  out.s.resize(std::min(m, n));
  out.u.resize(m, k);
  Matrix vt(k, n);
  std::vector<lapack_int> superb(static_cast<size_t>(12 * std::min(m, n)));
  lapack_int ns = 0;
  const int info = LAPACKE_dgesvdx(LAPACK_COL_MAJOR, 'V', 'V', 'I', m, n,
                                   work.data(), m, 0.0, 0.0, 1, k, &ns,
                                   out.s.data(), out.u.data(), m, vt.data(), k,
                                   superb.data());
  if (info != 0) lapack_failure("dgesvdx", info);
  if (ns != k) lapack_failure("dgesvdx (triplet count)", ns);
  out.s.conservativeResize(k);
  out.v = vt.transpose();
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  cblas_dgemm(CblasColMajor, CblasNoTrans, CblasNoTrans,
              static_cast<int>(a.rows()), static_cast<int>(b.cols()),
              static_cast<int>(a.cols()), 1.0, a.data(),
              static_cast<int>(a.rows()), b.data(), static_cast<int>(b.rows()),
              0.0, c.data(), static_cast<int>(c.rows()));
  return c;
}

}  // namespace iveig::detail
