#include "trinom/ext_exponent.hpp"

#include "trinom/error.hpp"

namespace trinom {

ExtExponent::ExtExponent(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw Error(Errc::InvalidArgument, "negative exponent " + value_.str());
}

ExtExponent ExtExponent::pow2(unsigned j) {
  BigInt v = 1;
  v <<= j;
  return ExtExponent(std::move(v));
}

ExtExponent ExtExponent::parse(const std::string& decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::InvalidArgument, "not a decimal exponent: '" + decimal + "'");
  }
  return ExtExponent(BigInt(decimal));
}

std::uint64_t ExtExponent::mod(std::uint64_t m) const {
  if (m == 0) throw Error(Errc::InvalidArgument, "modulus zero");
  return static_cast<std::uint64_t>(value_ % m);
}

ExtExponent operator-(const ExtExponent& a, const ExtExponent& b) {
  if (a.value_ < b.value_) {
    throw Error(Errc::InvalidArgument,
                "exponent difference " + a.to_string() + " - " + b.to_string() + " < 0");
  }
  return ExtExponent(a.value_ - b.value_);
}

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt mersenne(unsigned j) {
  BigInt v = 1;
  v <<= j;
  return v - 1;
}

}  // namespace trinom
