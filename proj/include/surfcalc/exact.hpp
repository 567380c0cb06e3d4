#pragma once

#include "surfcalc/types.hpp"

namespace surfcalc {

// Fraction-free linear algebra over exact scalars. The kernels are templated
// on the Eigen matrix type so they accept any dense integer-like scalar; all
// divisions in the Bareiss sweeps are exact.

// Determinant by single-step Bareiss elimination.
template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

// In the pivot-free Bareiss sweep of a symmetric matrix the pivot after step
// k equals the leading principal minor of size k+1; a pivot <= 0 settles the
// question without finishing the sweep.
template <typename Derived>
bool leading_minors_positive(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  Scalar prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return true;
}

// Semidefiniteness needs every principal minor, not just the leading ones.
bool principal_minors_nonnegative(const IMat& a);

struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  bool operator==(const Signature&) const = default;
};

// Sylvester inertia of a symmetric rational matrix, by symmetric congruence
// diagonalisation over Q.
Signature inertia(QMat a);

// Exact solve a*x = b. Returns false if a is singular.
bool solve_exact(QMat a, QVec b, QVec& x);

}  // namespace surfcalc
