#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/ext_exponent.hpp"
#include "trinom/field.hpp"

namespace trinom {

/// The six permutation-trinomial families, all of the form
/// x^e1 + x^e2 + x with unit coefficients:
///
///   F1  n = 3k,   k != 2 (mod 3)   x^(2^2k + 2^k - 1) + x^(2^2k) + x
///   F2  n = 3k,   k != 2 (mod 3)   x^(2^2k + 2^k - 1) + x^(2^2k - 2^k + 1) + x
///   F3  n = 3k+1                   x^(2^(2k+1) + 2^(k+1) + 1) + x^(2^(k+1) + 1) + x
///   F4  n = 3k-1                   x^(2^(3k-1) - 2^2k + 2^k) + x^(2^k - 1) + x
///   F5  n = 3k-1                   x^(2^2k + 2^k + 1) + x^(2^2k + 1) + x
///   F6  n = 4m, k odd, 1 <= k <= n-1, gcd(m, k) = 1
///                                  x^d + x^(2^2m) + x,  d = sum_{i=0}^{2m} 2^(ik)
enum class FamilyId { F1, F2, F3, F4, F5, F6 };

inline constexpr std::array<FamilyId, 6> kAllFamilies = {
    FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::F5, FamilyId::F6};

std::string_view to_string(FamilyId id) noexcept;
/// Accepts "F1".."F6" (case-insensitive); throws InvalidArgument.
FamilyId parse_family(std::string_view text);
/// Human-readable f(x) and hypotheses, for listings.
std::string_view formula(FamilyId id) noexcept;
std::string_view hypotheses(FamilyId id) noexcept;

struct FamilyParams {
  unsigned k = 0;
  unsigned m = 0;  // F6 only

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Extension degree n the family lives on for these parameters (no
/// hypothesis checks; F6 uses m).
unsigned family_degree(FamilyId id, const FamilyParams& p);

/// Empty when the hypotheses hold, else the violated hypothesis text.
std::optional<std::string> violated_hypothesis(FamilyId id, const FamilyParams& p);

/// Exponents exactly as the family formula writes them, unreduced.
std::array<ExtExponent, 3> family_exponents(FamilyId id, const FamilyParams& p);

class FamilyInstance {
 public:
  FamilyId id() const noexcept { return id_; }
  const FamilyParams& params() const noexcept { return params_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  unsigned degree() const noexcept { return field_->degree(); }
  /// e1 > e2 > e3 = 1, except F4 k=1 where e2 = e3 = 1.
  const std::array<ExtExponent, 3>& exponents() const noexcept { return exponents_; }
  /// Exponents reduced mod 2^n - 1 into [1, 2^n - 1].
  const std::array<std::uint64_t, 3>& reduced_exponents() const noexcept { return reduced_; }
  /// True when the hypotheses were bypassed (experiments only).
  bool forced() const noexcept { return forced_; }

  Bits operator()(Bits x) const noexcept {
    if (x == 0) return 0;
    const FieldSpec& f = *field_;
    return f.pow_reduced(x, residues_[0]) ^ f.pow_reduced(x, residues_[1]) ^
           f.pow_reduced(x, residues_[2]);
  }

 private:
  friend FamilyInstance instantiate(FamilyId, const FamilyParams&, FieldPtr);
  friend FamilyInstance instantiate_unchecked(FamilyId, const FamilyParams&, FieldPtr);
  FamilyInstance(FamilyId id, const FamilyParams& p, FieldPtr field, bool forced);

  FamilyId id_;
  FamilyParams params_;
  FieldPtr field_;
  std::array<ExtExponent, 3> exponents_;
  std::array<std::uint64_t, 3> reduced_{};
  std::array<std::uint64_t, 3> residues_{};  // reduced_ mod 2^n - 1, for pow_reduced
  bool forced_ = false;
};

/// Throws ConditionViolated (message names the violated hypothesis),
/// DegreeMismatch, or UnsupportedDegree. A null field means the default
/// modulus for the family's n.
FamilyInstance instantiate(FamilyId id, const FamilyParams& params, FieldPtr field = nullptr);

/// Same, but only k >= 1 (and m >= 1 for F6) is enforced. For experiments
/// on parameters outside the proven range.
FamilyInstance instantiate_unchecked(FamilyId id, const FamilyParams& params,
                                     FieldPtr field = nullptr);

Bits evaluate(const FamilyInstance& inst, Bits x);
FieldElement evaluate(const FamilyInstance& inst, const FieldElement& x);

struct ParamEntry {
  unsigned n;
  FamilyParams params;
};

/// All valid parameterizations with n <= n_max, ascending by n then k.
std::vector<ParamEntry> enumerate_params(FamilyId id, unsigned n_max);

struct GcdIdentity {
  std::string name;
  bool holds;
};

/// Every gcd (and congruence) identity the family's permutation argument
/// relies on, evaluated exactly for these parameters.
std::vector<GcdIdentity> check_gcd_identities(FamilyId id, const FamilyParams& params);

}  // namespace trinom
