#include "trinom/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trinom {

std::string_view to_string(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
    case FamilyId::F5: return "F5";
    case FamilyId::F6: return "F6";
  }
  return "?";
}

FamilyId parse_family(std::string_view text) {
  if (text.size() == 2 && std::toupper(static_cast<unsigned char>(text[0])) == 'F' &&
      text[1] >= '1' && text[1] <= '6') {
    return kAllFamilies[static_cast<std::size_t>(text[1] - '1')];
  }
  throw Error(Errc::InvalidArgument, "unknown family '" + std::string(text) + "' (expected F1..F6)");
}

std::string_view formula(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::F1: return "x^(2^(2k)+2^k-1) + x^(2^(2k)) + x";
    case FamilyId::F2: return "x^(2^(2k)+2^k-1) + x^(2^(2k)-2^k+1) + x";
    case FamilyId::F3: return "x^(2^(2k+1)+2^(k+1)+1) + x^(2^(k+1)+1) + x";
    case FamilyId::F4: return "x^(2^(3k-1)-2^(2k)+2^k) + x^(2^k-1) + x";
    case FamilyId::F5: return "x^(2^(2k)+2^k+1) + x^(2^(2k)+1) + x";
    case FamilyId::F6: return "x^d + x^(2^(2m)) + x, d = sum_{i=0}^{2m} 2^(ik)";
  }
  return "";
}

std::string_view hypotheses(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2: return "n = 3k, k ≢ 2 (mod 3)";
    case FamilyId::F3: return "n = 3k+1, k ≥ 1";
    case FamilyId::F4:
    case FamilyId::F5: return "n = 3k-1, k ≥ 1";
    case FamilyId::F6: return "n = 4m, k odd, 1 ≤ k ≤ n-1, gcd(m, k) = 1";
  }
  return "";
}

unsigned family_degree(FamilyId id, const FamilyParams& p) {
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2: return 3 * p.k;
    case FamilyId::F3: return 3 * p.k + 1;
    case FamilyId::F4:
    case FamilyId::F5: return p.k == 0 ? 0 : 3 * p.k - 1;
    case FamilyId::F6: return 4 * p.m;
  }
  return 0;
}

namespace {

std::optional<std::string> violated_basic(FamilyId id, const FamilyParams& p) {
  if (p.k < 1) return "hypothesis k ≥ 1 violated: k = " + std::to_string(p.k);
  if (id == FamilyId::F6 && p.m < 1) {
    return "hypothesis m ≥ 1 violated: m = " + std::to_string(p.m);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> violated_hypothesis(FamilyId id, const FamilyParams& p) {
  if (auto basic = violated_basic(id, p)) return basic;
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2:
      if (p.k % 3 == 2) {
        return "hypothesis k ≢ 2 (mod 3) violated: k = " + std::to_string(p.k) +
               " ≡ 2 (mod 3)";
      }
      break;
    case FamilyId::F3:
    case FamilyId::F4:
    case FamilyId::F5: break;
    case FamilyId::F6: {
      const unsigned n = 4 * p.m;
      if (p.k % 2 == 0) return "hypothesis k odd violated: k = " + std::to_string(p.k);
      if (p.k > n - 1) {
        return "hypothesis 1 ≤ k ≤ n-1 violated: k = " + std::to_string(p.k) +
               ", n = " + std::to_string(n);
      }
      if (std::gcd(p.m, p.k) != 1) {
        return "hypothesis gcd(m, k) = 1 violated: gcd(" + std::to_string(p.m) + ", " +
               std::to_string(p.k) + ") = " + std::to_string(std::gcd(p.m, p.k));
      }
      break;
    }
  }
  return std::nullopt;
}

std::array<ExtExponent, 3> family_exponents(FamilyId id, const FamilyParams& p) {
  const unsigned k = p.k;
  auto two = [](unsigned j) { return ExtExponent::pow2(j); };
  const ExtExponent one = 1;
  switch (id) {
    case FamilyId::F1: return {two(2 * k) + two(k) - one, two(2 * k), one};
    case FamilyId::F2: return {two(2 * k) + two(k) - one, two(2 * k) - two(k) + one, one};
    case FamilyId::F3: return {two(2 * k + 1) + two(k + 1) + one, two(k + 1) + one, one};
    case FamilyId::F4: return {two(3 * k - 1) + two(k) - two(2 * k), two(k) - one, one};
    case FamilyId::F5: return {two(2 * k) + two(k) + one, two(2 * k) + one, one};
    case FamilyId::F6: {
      ExtExponent d = 0;
      for (unsigned i = 0; i <= 2 * p.m; ++i) d = d + two(i * k);
      return {d, two(2 * p.m), one};
    }
  }
  return {};
}

FamilyInstance::FamilyInstance(FamilyId id, const FamilyParams& p, FieldPtr field, bool forced)
    : id_(id), params_(p), field_(std::move(field)), exponents_(family_exponents(id, p)),
      forced_(forced) {
  const std::uint64_t order = field_->group_order();
  for (std::size_t i = 0; i < 3; ++i) {
    residues_[i] = exponents_[i].mod(order);
    reduced_[i] = residues_[i] == 0 ? order : residues_[i];
  }
}

namespace {

FieldPtr resolve_field(FamilyId id, const FamilyParams& params, FieldPtr field) {
  const unsigned n = family_degree(id, params);
  if (!field) return FieldSpec::standard(n);
  if (field->degree() != n) {
    throw Error(Errc::DegreeMismatch,
                std::string(to_string(id)) + " with these parameters lives on n = " +
                    std::to_string(n) + ", field has n = " + std::to_string(field->degree()));
  }
  return field;
}

}  // namespace

FamilyInstance instantiate(FamilyId id, const FamilyParams& params, FieldPtr field) {
  if (auto why = violated_hypothesis(id, params)) {
    throw Error(Errc::ConditionViolated, std::string(to_string(id)) + ": " + *why);
  }
  return FamilyInstance(id, params, resolve_field(id, params, std::move(field)), false);
}

FamilyInstance instantiate_unchecked(FamilyId id, const FamilyParams& params, FieldPtr field) {
  if (auto why = violated_basic(id, params)) {
    throw Error(Errc::ConditionViolated, std::string(to_string(id)) + ": " + *why);
  }
  const bool forced = violated_hypothesis(id, params).has_value();
  return FamilyInstance(id, params, resolve_field(id, params, std::move(field)), forced);
}

Bits evaluate(const FamilyInstance& inst, Bits x) { return inst(x); }

FieldElement evaluate(const FamilyInstance& inst, const FieldElement& x) {
  if (!x.field().same_as(inst.field())) {
    throw Error(Errc::FieldMismatch, "argument does not belong to the instance's field");
  }
  return {inst.field_ptr(), inst(x.bits())};
}

std::vector<ParamEntry> enumerate_params(FamilyId id, unsigned n_max) {
  std::vector<ParamEntry> out;
  switch (id) {
    case FamilyId::F1:
    case FamilyId::F2:
      for (unsigned k = 1; 3 * k <= n_max; ++k) {
        if (k % 3 != 2) out.push_back({3 * k, {k, 0}});
      }
      break;
    case FamilyId::F3:
      for (unsigned k = 1; 3 * k + 1 <= n_max; ++k) out.push_back({3 * k + 1, {k, 0}});
      break;
    case FamilyId::F4:
    case FamilyId::F5:
      for (unsigned k = 1; 3 * k - 1 <= n_max; ++k) out.push_back({3 * k - 1, {k, 0}});
      break;
    case FamilyId::F6:
      for (unsigned m = 1; 4 * m <= n_max; ++m) {
        const unsigned n = 4 * m;
        for (unsigned k = 1; k <= n - 1; k += 2) {
          if (std::gcd(m, k) == 1) out.push_back({n, {k, m}});
        }
      }
      break;
  }
  return out;
}

std::vector<GcdIdentity> check_gcd_identities(FamilyId id, const FamilyParams& p) {
  std::vector<GcdIdentity> out;
  const unsigned k = p.k;
  auto pow2 = [](unsigned j) {
    BigInt v = 1;
    v <<= j;
    return v;
  };
  auto is_one = [](const BigInt& a, const BigInt& b) { return big_gcd(a, b) == 1; };

  switch (id) {
    case FamilyId::F1:
      out.push_back({"gcd(2^(2k+1)-4, 2^(3k)-1) = 1", is_one(pow2(2 * k + 1) - 4, mersenne(3 * k))});
      out.push_back({"2^gcd(2k-1, 3k) - 1 = 1",
                     mersenne(std::gcd(2 * k - 1, 3 * k)) == 1});
      break;
    case FamilyId::F2: {
      const BigInt s = pow2(2 * k) + pow2(k) + 1;
      out.push_back({"gcd(2^(2k)+2^k+1, 2^k+3) = 1", is_one(s, pow2(k) + 3)});
      out.push_back({"gcd(2^k+3, 7) = 1", is_one(pow2(k) + 3, 7)});
      out.push_back({"gcd(2^(2k)+2^k+1, 2^(k+1)-1) = 1", is_one(s, mersenne(k + 1))});
      if (k % 3 == 0) out.push_back({"gcd(7, 2^(2k)+2^k+1) = 1", is_one(7, s)});
      if (k % 3 == 1) out.push_back({"2^(2k) ≡ 4 (mod 7)", pow2(2 * k) % 7 == 4});
      break;
    }
    case FamilyId::F3:
    case FamilyId::F5: break;
    case FamilyId::F4: {
      const unsigned n = 3 * k - 1;
      out.push_back({"gcd(2^k-1, 2^n-1) = 1", is_one(mersenne(k), mersenne(n))});
      out.push_back({"2^gcd(k, 3k-1) - 1 = 1", mersenne(std::gcd(k, n)) == 1});
      if (n % 2 == 0) out.push_back({"2^k ≡ 2 (mod 3)", pow2(k) % 3 == 2});
      break;
    }
    case FamilyId::F6: {
      const unsigned n = 4 * p.m;
      BigInt d = 0;
      for (unsigned i = 0; i <= 2 * p.m; ++i) d += pow2(i * k);
      const BigInt num = mersenne((2 * p.m + 1) * k);
      const BigInt den = mersenne(k);
      out.push_back({"d = (2^((2m+1)k)-1)/(2^k-1)", num % den == 0 && num / den == d});
      out.push_back({"gcd(d, 2^n-1) = 1", is_one(d, mersenne(n))});
      out.push_back({"gcd(2^k-1, 2^(4m)-1) = 1", is_one(den, mersenne(n))});
      out.push_back({"2^k ≡ 2 (mod 3)", pow2(k) % 3 == 2});
      break;
    }
  }
  return out;
}

}  // namespace trinom
