#include "surfcalc/exact.hpp"

#include <vector>

namespace surfcalc {

bool principal_minors_nonnegative(const IMat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> idx;
  // Every nonempty subset of rows/columns.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    IMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = a(idx[i], idx[j]);
    if (det_exact(sub) < 0) return false;
  }
  return true;
}

Signature inertia(QMat a) {
  const Eigen::Index n = a.rows();
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Prefer a congruence swap with a later nonzero diagonal entry.
      Eigen::Index d = -1, o = -1;
      for (Eigen::Index j = k + 1; j < n && d < 0; ++j)
        if (a(j, j) != 0) d = j;
      for (Eigen::Index j = k + 1; j < n && o < 0; ++j)
        if (a(k, j) != 0) o = j;
      if (d >= 0) {
        a.row(k).swap(a.row(d));
        a.col(k).swap(a.col(d));
      } else if (o >= 0) {
        // All remaining diagonal entries vanish: a(k,k) becomes 2*a(k,o).
        a.row(k) += a.row(o);
        a.col(k) += a.col(o);
      } else {
        ++sig.n_zero;
        continue;
      }
    }
    const Rat pivot = a(k, k);
    if (pivot > 0) ++sig.n_plus; else ++sig.n_minus;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
  }
  return sig;
}

bool solve_exact(QMat a, QVec b, QVec& x) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      a.row(k).swap(a.row(p));
      std::swap(b(k), b(p));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / a(k, k);
      a.row(i) -= f * a.row(k);
      b(i) -= f * b(k);
    }
  }
  x = QVec::Zero(n);
  for (Eigen::Index k = n; k-- > 0;) {
    Rat s = b(k);
    for (Eigen::Index j = k + 1; j < n; ++j) s -= a(k, j) * x(j);
    x(k) = s / a(k, k);
  }
  return true;
}

}  // namespace surfcalc
