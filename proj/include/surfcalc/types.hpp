#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcalc {

namespace mp = boost::multiprecision;

// Exact scalars. Floating point is banned throughout the library; every
// quantity is an integer or a rational in lowest terms.
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

enum class ErrorCode {
  LatticeMismatch,
  InvariantViolation,
  NotNegDef,
  NotNegDefSupport,
  NotContractible,
  NotMinimal,
  BudgetExceeded,
  InvalidSubscroll,
  ArityError,
  InvalidFiber,
  NotAmple,
  NotApplicable,
  NotInScope,
  InvalidInvariants,
  BadInput,
};

const char* to_string(ErrorCode c);

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(what), code(c) {}
};

// Cap on backtracking nodes / enumerated cells shared by every exhaustive
// search in the library. SURFCALC_BUDGET in the environment overrides it.
std::uint64_t enumeration_budget();

Rat rat_from_string(const std::string& s);
// "p" when the denominator is 1, else "p/q" with q > 0, lowest terms.
std::string rat_to_string(const Rat& r);

QVec to_rational(const IVec& v);
QMat to_rational(const IMat& m);

Int ifloor(const Rat& r);
Int iceil(const Rat& r);

inline bool is_even(const Int& n) { return (n % 2) == 0; }

bool vec_eq(const IVec& a, const IVec& b);
bool lex_less(const IVec& a, const IVec& b);

}  // namespace surfcalc
