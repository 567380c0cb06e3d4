#pragma once

#include "surfcalc/exact.hpp"
#include "surfcalc/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfcalc {

// A finite-rank free abelian group with an integer symmetric bilinear form.
// Immutable after construction; every operation below is a pure function.
struct Lattice {
  std::string name;
  IMat gram;
  std::vector<std::string> basis;  // empty, or exactly rank distinct names

  Lattice(IMat gram_, std::vector<std::string> basis_ = {},
          std::string name_ = "");

  Eigen::Index rank() const { return gram.rows(); }

  // diag(1, -1, ..., -1) of the given rank, basis e0..e{r-1}.
  static Lattice diagonal(const std::vector<Int>& entries,
                          std::string name = "");
};

// Integer (or rational, where flagged) coordinate vector in a named lattice
// basis. `lattice` refers to Lattice::name.
struct DivisorClass {
  std::string lattice;
  IVec coords;
};

struct QDivisorClass {
  std::string lattice;
  QVec coords;
};

// x^T gram y, exactly.
Int pair(const Lattice& L, const IVec& x, const IVec& y);
Rat pair(const Lattice& L, const QVec& x, const QVec& y);
Int pair(const Lattice& L, const DivisorClass& x, const DivisorClass& y);
Rat pair(const Lattice& L, const QDivisorClass& x, const QDivisorClass& y);

// x^T G x < 0 for all integer x != 0, decided by the leading principal
// minors of -G.
bool is_negative_definite(const Lattice& L);

// x^T G x <= 0 for all x, decided by all principal minors of -G (leading
// minors are not enough for semidefinite forms).
bool is_negative_semidefinite(const Lattice& L);

// Exact Sylvester inertia of the form.
Signature signature(const Lattice& L);

bool is_unimodular(const Lattice& L);

enum class Parity { Even, Odd };
Parity parity(const Lattice& L);

// True iff x.x == c.x (mod 2) for every basis vector x; by linearity of
// x^2 mod 2 this settles the congruence for the whole lattice.
bool parity_vector_check(const Lattice& L, const IVec& c);
bool parity_vector_check(const Lattice& L, const DivisorClass& c);

struct DotConstraint {
  IVec with;
  Int value;
};

// All integer vectors x with |x_i| <= box_i, x.x = self_int and
// x.constraint = value for each constraint, in lexicographic order.
// A box too small for the caller's completeness needs is the caller's risk.
std::vector<IVec> vectors_with(const Lattice& L, const Int& self_int,
                               const std::vector<DotConstraint>& dots,
                               const IVec& box);
std::vector<IVec> vectors_with(const Lattice& L, const Int& self_int,
                               const std::vector<DotConstraint>& dots,
                               const Int& box);

}  // namespace surfcalc
