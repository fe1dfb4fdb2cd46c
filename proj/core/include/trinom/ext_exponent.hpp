#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trinom {

using BigInt = boost::multiprecision::cpp_int;

/// Nonnegative integer of unbounded size. Exponents such as
/// sum_{i<=2m} 2^(ik) leave the 64-bit range quickly, so exponents are kept
/// exact and only reduced when a power is actually taken.
class ExtExponent {
 public:
  ExtExponent() = default;
  ExtExponent(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExtExponent(BigInt value);

  static ExtExponent pow2(unsigned j);
  static ExtExponent parse(const std::string& decimal);

  const BigInt& value() const noexcept { return value_; }

  /// Residue modulo `m` (m >= 1).
  std::uint64_t mod(std::uint64_t m) const;
  bool is_zero() const noexcept { return value_.is_zero(); }
  std::string to_string() const { return value_.str(); }

  /// Throws InvalidArgument when the result would be negative.
  friend ExtExponent operator-(const ExtExponent& a, const ExtExponent& b);
  friend ExtExponent operator+(const ExtExponent& a, const ExtExponent& b) {
    return ExtExponent(a.value_ + b.value_);
  }
  friend ExtExponent operator*(const ExtExponent& a, const ExtExponent& b) {
    return ExtExponent(a.value_ * b.value_);
  }

  friend bool operator==(const ExtExponent& a, const ExtExponent& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtExponent& a,
                                          const ExtExponent& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

/// Exact gcd on unbounded integers.
BigInt big_gcd(const BigInt& a, const BigInt& b);

/// 2^j - 1 as an exact integer.
BigInt mersenne(unsigned j);

}  // namespace trinom
