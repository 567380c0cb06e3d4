#include "surfcalc/lattice.hpp"

#include <algorithm>
#include <set>

namespace surfcalc {

Lattice::Lattice(IMat gram_, std::vector<std::string> basis_, std::string name_)
    : name(std::move(name_)), gram(std::move(gram_)), basis(std::move(basis_)) {
  if (gram.rows() < 1 || gram.rows() != gram.cols())
    throw Error(ErrorCode::InvariantViolation, "lattice rank must be >= 1");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i))
        throw Error(ErrorCode::InvariantViolation, "gram matrix not symmetric");
  if (!basis.empty()) {
    if (static_cast<Eigen::Index>(basis.size()) != gram.rows())
      throw Error(ErrorCode::InvariantViolation,
                  "basis_names length must equal rank");
    std::set<std::string> uniq(basis.begin(), basis.end());
    if (uniq.size() != basis.size())
      throw Error(ErrorCode::InvariantViolation, "basis names must be distinct");
  }
}

Lattice Lattice::diagonal(const std::vector<Int>& entries, std::string name) {
  const Eigen::Index n = static_cast<Eigen::Index>(entries.size());
  IMat g = IMat::Zero(n, n);
  std::vector<std::string> basis;
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = entries[i];
    basis.push_back("e" + std::to_string(i));
  }
  return Lattice(std::move(g), std::move(basis), std::move(name));
}

namespace {

void check_dims(const Lattice& L, Eigen::Index n) {
  if (n != L.rank())
    throw Error(ErrorCode::LatticeMismatch,
                "coordinate length does not match lattice rank");
}

void check_same(const Lattice& L, const std::string& a, const std::string& b) {
  if (a != b)
    throw Error(ErrorCode::LatticeMismatch,
                "divisor classes live in different lattices: '" + a +
                    "' vs '" + b + "'");
  if (!L.name.empty() && !a.empty() && a != L.name)
    throw Error(ErrorCode::LatticeMismatch,
                "divisor class lattice '" + a + "' is not '" + L.name + "'");
}

}  // namespace

Int pair(const Lattice& L, const IVec& x, const IVec& y) {
  check_dims(L, x.size());
  check_dims(L, y.size());
  return (x.transpose() * L.gram * y)(0, 0);
}

Rat pair(const Lattice& L, const QVec& x, const QVec& y) {
  check_dims(L, x.size());
  check_dims(L, y.size());
  return (x.transpose() * to_rational(L.gram) * y)(0, 0);
}

Int pair(const Lattice& L, const DivisorClass& x, const DivisorClass& y) {
  check_same(L, x.lattice, y.lattice);
  return pair(L, x.coords, y.coords);
}

Rat pair(const Lattice& L, const QDivisorClass& x, const QDivisorClass& y) {
  check_same(L, x.lattice, y.lattice);
  return pair(L, x.coords, y.coords);
}

bool is_negative_definite(const Lattice& L) {
  return leading_minors_positive((-L.gram).eval());
}

bool is_negative_semidefinite(const Lattice& L) {
  return principal_minors_nonnegative((-L.gram).eval());
}

Signature signature(const Lattice& L) { return inertia(to_rational(L.gram)); }

bool is_unimodular(const Lattice& L) {
  const Int d = det_exact(L.gram);
  return d == 1 || d == -1;
}

Parity parity(const Lattice& L) {
  for (Eigen::Index i = 0; i < L.rank(); ++i)
    if (!is_even(L.gram(i, i))) return Parity::Odd;
  return Parity::Even;
}

bool parity_vector_check(const Lattice& L, const IVec& c) {
  check_dims(L, c.size());
  const IVec gc = L.gram * c;
  for (Eigen::Index i = 0; i < L.rank(); ++i)
    if (!is_even(L.gram(i, i) - gc(i))) return false;
  return true;
}

bool parity_vector_check(const Lattice& L, const DivisorClass& c) {
  check_same(L, c.lattice, c.lattice);
  return parity_vector_check(L, c.coords);
}

namespace {

struct Enumerator {
  const Lattice& L;
  const Int& self_int;
  Eigen::Index n;
  IVec box;
  IVec x;
  // partial(j) = sum_{i < depth} x_i * gram(i, j)
  IVec partial;
  Int norm;  // quadratic form of the prefix
  struct Linear {
    IVec weights;  // gram * constraint vector
    Int target;
    Int current;
    std::vector<Int> slack;  // max |remaining contribution| from depth t on
  };
  std::vector<Linear> linear;
  std::vector<IVec>& out;

  void run(Eigen::Index depth) {
    if (depth == n) {
      if (norm != self_int) return;
      out.push_back(x);
      return;
    }
    for (Int v = -box(depth); v <= box(depth); ++v) {
      bool feasible = true;
      for (const auto& c : linear) {
        const Int cur = c.current + v * c.weights(depth);
        const Int& slack = c.slack[static_cast<size_t>(depth) + 1];
        if (cur - slack > c.target || cur + slack < c.target) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      x(depth) = v;
      const Int saved_norm = norm;
      norm += 2 * v * partial(depth) + v * v * L.gram(depth, depth);
      for (Eigen::Index j = 0; j < n; ++j) partial(j) += v * L.gram(depth, j);
      for (auto& c : linear) c.current += v * c.weights(depth);
      run(depth + 1);
      for (auto& c : linear) c.current -= v * c.weights(depth);
      for (Eigen::Index j = 0; j < n; ++j) partial(j) -= v * L.gram(depth, j);
      norm = saved_norm;
    }
    x(depth) = 0;
  }
};

}  // namespace

std::vector<IVec> vectors_with(const Lattice& L, const Int& self_int,
                               const std::vector<DotConstraint>& dots,
                               const IVec& box) {
  check_dims(L, box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i)
    if (box(i) < 1)
      throw Error(ErrorCode::InvariantViolation, "box entries must be >= 1");

  std::vector<IVec> out;
  Enumerator e{L, self_int, L.rank(), box, IVec::Zero(L.rank()),
               IVec::Zero(L.rank()), Int(0), {}, out};
  for (const auto& d : dots) {
    check_dims(L, d.with.size());
    Enumerator::Linear c;
    c.weights = L.gram * d.with;
    c.target = d.value;
    c.current = 0;
    c.slack.assign(static_cast<size_t>(L.rank()) + 1, Int(0));
    for (Eigen::Index t = L.rank(); t-- > 0;)
      c.slack[t] = c.slack[t + 1] + box(t) * abs(c.weights(t));
    e.linear.push_back(std::move(c));
  }
  e.run(0);
  return out;  // enumeration order is lexicographic by construction
}

std::vector<IVec> vectors_with(const Lattice& L, const Int& self_int,
                               const std::vector<DotConstraint>& dots,
                               const Int& box) {
  IVec b = IVec::Constant(L.rank(), box);
  return vectors_with(L, self_int, dots, b);
}

}  // namespace surfcalc
