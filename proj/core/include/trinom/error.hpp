#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trinom {

enum class Errc {
  FieldMismatch,
  InvalidModulus,
  UnsupportedDegree,
  ZeroInverse,
  NonDivisor,
  NoCubeRoot,
  ZeroBase,
  NonInvertibleDenominator,
  ConditionViolated,
  DegreeMismatch,
  BudgetExceeded,
  NotAPermutation,
  NoValidCandidate,
  Zeta1Zero,
  ZeroDenominator,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// Zeta1Zero, ZeroDenominator and NoValidCandidate are internal-error
/// signals: they mean the instance or the code is wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trinom
