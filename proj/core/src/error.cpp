#include "trinom/error.hpp"

namespace trinom {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::NonDivisor: return "NonDivisor";
    case Errc::NoCubeRoot: return "NoCubeRoot";
    case Errc::ZeroBase: return "ZeroBase";
    case Errc::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NoValidCandidate: return "NoValidCandidate";
    case Errc::Zeta1Zero: return "Zeta1Zero";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace trinom
