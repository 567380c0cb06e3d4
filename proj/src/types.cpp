#include "surfcalc/types.hpp"

#include <cstdlib>

namespace surfcalc {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::LatticeMismatch:    return "LatticeMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotNegDef:          return "NotNegDef";
    case ErrorCode::NotNegDefSupport:   return "NotNegDefSupport";
    case ErrorCode::NotContractible:    return "NotContractible";
    case ErrorCode::NotMinimal:         return "NotMinimal";
    case ErrorCode::BudgetExceeded:     return "BudgetExceeded";
    case ErrorCode::InvalidSubscroll:   return "InvalidSubscroll";
    case ErrorCode::ArityError:         return "ArityError";
    case ErrorCode::InvalidFiber:       return "InvalidFiber";
    case ErrorCode::NotAmple:           return "NotAmple";
    case ErrorCode::NotApplicable:      return "NotApplicable";
    case ErrorCode::NotInScope:         return "NotInScope";
    case ErrorCode::InvalidInvariants:  return "InvalidInvariants";
    case ErrorCode::BadInput:           return "BadInput";
  }
  return "UnknownError";
}

std::uint64_t enumeration_budget() {
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("SURFCALC_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(100000000ULL);
  }();
  return value;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::BadInput, "empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator: " + s);
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error& e) {
    throw Error(ErrorCode::BadInput, "bad rational literal: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

QVec to_rational(const IVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rat(v(i));
  return out;
}

QMat to_rational(const IMat& m) {
  QMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

Int ifloor(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (q * den > num) q -= 1;  // gmp division truncates toward zero
  return q;
}

Int iceil(const Rat& r) { return -ifloor(-r); }

bool vec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool lex_less(const IVec& a, const IVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

}  // namespace surfcalc
