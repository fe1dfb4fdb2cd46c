#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinom/families.hpp"
#include "trinom/field.hpp"

namespace trinom {

/// Intermediate quantities of one inversion. a, b, c are the conjugates
/// a, a^(2^k), a^(2^2k) of the target value; the optional entries are set by
/// the families whose construction uses them.
struct InversionTrace {
  FamilyId family = FamilyId::F1;
  std::string branch;
  Bits a = 0, b = 0, c = 0;
  Bits epsilon = 0;  // a + b + c
  std::optional<Bits> lambda;
  std::optional<Bits> zeta1, zeta2;
  // F4 cubic alpha x^3 + beta x^2 + gamma x + theta
  std::optional<Bits> alpha, beta_coef, gamma, theta_coef;
  // F6
  std::optional<Bits> w, z, t, beta, theta;
  std::vector<Bits> candidates;
  Bits chosen = 0;
};

struct Inversion {
  Bits x;
  InversionTrace trace;
};

/// The unique x with inst(x) = a. Every result is re-evaluated before it is
/// returned; NoValidCandidate (or Zeta1Zero / ZeroDenominator) means the
/// construction failed, which for a valid instance is a bug.
Inversion invert(const FamilyInstance& inst, Bits a);
FieldElement invert(const FamilyInstance& inst, const FieldElement& a);

// Per-family constructions; each requires a != 0 and the matching family.
Bits invert_f1(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);
Bits invert_f2(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);
Bits invert_f3(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);
Bits invert_f4(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);
Bits invert_f5(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);
Bits invert_f6(const FamilyInstance& inst, Bits a, InversionTrace* trace = nullptr);

}  // namespace trinom
