#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "trinom/error.hpp"
#include "trinom/ext_exponent.hpp"
#include "trinom/gf2poly.hpp"

namespace trinom {

/// Raw element encoding: bit i is the coefficient of X^i.
using Bits = std::uint32_t;

enum class MulStrategy {
  Auto,      // log/antilog tables when n <= kLogTableMaxDegree
  ShiftXor,  // portable baseline only
};

inline constexpr unsigned kLogTableMaxDegree = 20;

class FieldElement;

/// F_{2^n} = F_2[X]/(modulus) for 2 <= n <= 32. Immutable once built and
/// safe to share across threads. The raw `Bits` API is the hot path used
/// by the exhaustive checkers; FieldElement wraps it with binding checks.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  struct Token {};

 public:
  /// `modulus` is the full polynomial including the X^n bit.
  /// Throws UnsupportedDegree or InvalidModulus.
  static std::shared_ptr<const FieldSpec> make(
      unsigned n, std::uint64_t modulus, MulStrategy strategy = MulStrategy::Auto);

  /// The least irreducible modulus of degree n; instances are cached.
  static std::shared_ptr<const FieldSpec> standard(unsigned n);

  static std::uint64_t default_modulus(unsigned n);

  FieldSpec(Token, unsigned n, std::uint64_t modulus, MulStrategy strategy);

  unsigned degree() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// 2^n.
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  /// 2^n - 1, the order of the multiplicative group.
  std::uint64_t group_order() const noexcept { return size() - 1; }
  bool has_log_tables() const noexcept { return !log_.empty(); }
  /// The generator the log tables are built on (0 when there are none).
  Bits generator() const noexcept { return generator_; }

  bool contains(std::uint64_t bits) const noexcept { return bits < size(); }
  bool same_as(const FieldSpec& other) const noexcept {
    return n_ == other.n_ && modulus_ == other.modulus_;
  }

  Bits add(Bits a, Bits b) const noexcept { return a ^ b; }
  Bits mul(Bits a, Bits b) const noexcept {
    if (log_.empty()) return mul_shift_xor(a, b);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Bits mul_shift_xor(Bits a, Bits b) const noexcept;
  Bits square(Bits a) const noexcept { return mul(a, a); }
  /// Throws ZeroInverse.
  Bits inv(Bits a) const;
  /// a / b; throws ZeroInverse when b = 0.
  Bits div(Bits a, Bits b) const { return mul(a, inv(b)); }

  /// a^e with 0^0 = 1.
  Bits pow(Bits a, std::uint64_t e) const noexcept;
  Bits pow(Bits a, const ExtExponent& e) const;
  /// a^r for a != 0 and an exponent already reduced into [0, 2^n - 2].
  Bits pow_reduced(Bits a, std::uint64_t r) const noexcept {
    if (!log_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * r) % group_order()];
    return pow_square_multiply(a, r);
  }

  /// a^(2^j).
  Bits frobenius(Bits a, unsigned j) const noexcept;
  /// The unique b with b^2 = a.
  Bits sqrt(Bits a) const noexcept { return frobenius(a, n_ - 1); }
  /// sum_{i < n/k} a^(2^(ik)); throws NonDivisor unless k | n.
  Bits trace(Bits a, unsigned k) const;
  /// Smallest w with w^2 + w + 1 = 0; throws NoCubeRoot for odd n.
  Bits cube_root_of_unity() const;
  /// a^(num / den) in the multiplicative group.
  /// Throws ZeroBase or NonInvertibleDenominator.
  Bits fractional_power(Bits a, const ExtExponent& num, const ExtExponent& den) const;

  /// Discrete log to base generator(); requires log tables and a != 0.
  std::uint32_t log(Bits a) const noexcept { return log_[a]; }

  /// Throws InvalidArgument when bits do not fit the field.
  FieldElement element(std::uint64_t bits) const;
  FieldElement zero() const;
  FieldElement one() const;

 private:
  Bits pow_square_multiply(Bits a, std::uint64_t e) const noexcept;
  void build_log_tables();

  unsigned n_;
  std::uint64_t modulus_;
  Bits generator_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Bits> exp_;  // length 2 * (2^n - 1), so log sums need no reduction
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// An element bound to its field. Operations across different fields throw
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Bits bits);

  Bits bits() const noexcept { return bits_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.bits_ == b.bits_;
  }

 private:
  FieldPtr field_;
  Bits bits_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, const ExtExponent& e);
FieldElement frobenius(const FieldElement& a, unsigned j);
FieldElement sqrt(const FieldElement& a);
FieldElement trace(const FieldElement& a, unsigned k);
FieldElement cube_root_of_unity(const FieldPtr& field);
FieldElement fractional_power(const FieldElement& a, const ExtExponent& num,
                              const ExtExponent& den);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/// Irreducibility over F_2 of a packed polynomial of degree 1..63.
inline bool is_irreducible(std::uint64_t poly) { return gf2poly::is_irreducible(poly); }

/// "0x1b" style, lowercase.
std::string to_hex(std::uint64_t bits);
/// Accepts an optional 0x/0X prefix; throws InvalidArgument.
std::uint64_t parse_hex(std::string_view text);

/// Modulus flag values may omit the X^n bit: 0x1B and 0x11B both name
/// x^8+x^4+x^3+x+1 when n = 8. Throws InvalidModulus otherwise.
std::uint64_t normalize_modulus(unsigned n, std::uint64_t value);

}  // namespace trinom
