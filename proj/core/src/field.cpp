#include "trinom/field.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <mutex>

namespace trinom {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field())) {
    throw Error(Errc::FieldMismatch, "operands belong to different fields (" +
                                         to_hex(a.field().modulus()) + " vs " +
                                         to_hex(b.field().modulus()) + ")");
  }
}

}  // namespace

std::uint64_t FieldSpec::default_modulus(unsigned n) {
  if (n < gf2poly::kMinDegree || n > gf2poly::kMaxDegree) {
    throw Error(Errc::UnsupportedDegree,
                "field degree " + std::to_string(n) + " outside [2, 32]");
  }
  return gf2poly::kDefaultModuli[n];
}

std::shared_ptr<const FieldSpec> FieldSpec::make(unsigned n, std::uint64_t modulus,
                                                 MulStrategy strategy) {
  if (n < gf2poly::kMinDegree || n > gf2poly::kMaxDegree) {
    throw Error(Errc::UnsupportedDegree,
                "field degree " + std::to_string(n) + " outside [2, 32]");
  }
  if (gf2poly::degree(modulus) != static_cast<int>(n) || (modulus & 1) == 0 ||
      !gf2poly::is_irreducible(modulus)) {
    throw Error(Errc::InvalidModulus,
                to_hex(modulus) + " is not an irreducible polynomial of degree " +
                    std::to_string(n));
  }
  return std::make_shared<const FieldSpec>(Token{}, n, modulus, strategy);
}

std::shared_ptr<const FieldSpec> FieldSpec::standard(unsigned n) {
  static std::mutex mu;
  static std::array<std::shared_ptr<const FieldSpec>, gf2poly::kMaxDegree + 1> cache;
  const std::uint64_t modulus = default_modulus(n);
  std::lock_guard lock(mu);
  if (!cache[n]) cache[n] = make(n, modulus);
  return cache[n];
}

FieldSpec::FieldSpec(Token, unsigned n, std::uint64_t modulus, MulStrategy strategy)
    : n_(n), modulus_(modulus) {
  if (strategy == MulStrategy::Auto && n <= kLogTableMaxDegree) build_log_tables();
}

void FieldSpec::build_log_tables() {
  const std::uint64_t order = group_order();
  const auto factors = prime_factors(order);
  Bits g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (pow_square_multiply(g, order / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  generator_ = g;
  log_.assign(size(), 0);
  exp_.assign(2 * order, 0);
  Bits x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_shift_xor(x, g);
  }
}

Bits FieldSpec::mul_shift_xor(Bits a, Bits b) const noexcept {
  return static_cast<Bits>(gf2poly::mulmod(a, b, modulus_));
}

Bits FieldSpec::pow_square_multiply(Bits a, std::uint64_t e) const noexcept {
  Bits result = 1;
  Bits base = a;
  while (e != 0) {
    if (e & 1) result = mul_shift_xor(result, base);
    base = mul_shift_xor(base, base);
    e >>= 1;
  }
  return result;
}

Bits FieldSpec::inv(Bits a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero");
  if (!log_.empty()) return exp_[group_order() - log_[a]];
  return pow_square_multiply(a, group_order() - 1);
}

Bits FieldSpec::pow(Bits a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return pow_reduced(a, e % group_order());
}

Bits FieldSpec::pow(Bits a, const ExtExponent& e) const {
  if (e.is_zero()) return 1;
  if (a == 0) return 0;
  return pow_reduced(a, e.mod(group_order()));
}

Bits FieldSpec::frobenius(Bits a, unsigned j) const noexcept {
  j %= n_;
  if (a == 0 || j == 0) return a;
  if (!log_.empty()) {
    return exp_[(static_cast<std::uint64_t>(log_[a]) << j) % group_order()];
  }
  for (unsigned i = 0; i < j; ++i) a = mul_shift_xor(a, a);
  return a;
}

Bits FieldSpec::trace(Bits a, unsigned k) const {
  if (k == 0 || n_ % k != 0) {
    throw Error(Errc::NonDivisor, "trace requires k | n (k = " + std::to_string(k) +
                                      ", n = " + std::to_string(n_) + ")");
  }
  Bits sum = 0;
  Bits term = a;
  for (unsigned i = 0; i < n_ / k; ++i) {
    sum ^= term;
    term = frobenius(term, k);
  }
  return sum;
}

Bits FieldSpec::cube_root_of_unity() const {
  if (n_ % 2 != 0) {
    throw Error(Errc::NoCubeRoot, "no primitive cube root of unity in F_2^" +
                                      std::to_string(n_) + " (n odd)");
  }
  const std::uint64_t third = group_order() / 3;
  for (Bits g = 2;; ++g) {
    const Bits w = pow_square_multiply(g, third);
    if (w != 1) return std::min(w, w ^ 1);  // roots of w^2+w+1 are w and w+1
  }
}

Bits FieldSpec::fractional_power(Bits a, const ExtExponent& num,
                                 const ExtExponent& den) const {
  if (a == 0) throw Error(Errc::ZeroBase, "fractional power of zero");
  const BigInt order = group_order();
  const BigInt d = den.value() % order;
  if (big_gcd(d, order) != 1) {
    throw Error(Errc::NonInvertibleDenominator,
                "denominator " + den.to_string() + " not invertible mod 2^" +
                    std::to_string(n_) + "-1");
  }
  // Extended Euclid for d^-1 mod order.
  BigInt r0 = order, r1 = d, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  BigInt den_inv = t0 % order;
  if (den_inv < 0) den_inv += order;
  const BigInt exponent = (num.value() % order) * den_inv % order;
  return pow_reduced(a, static_cast<std::uint64_t>(exponent));
}

FieldElement FieldSpec::element(std::uint64_t bits) const {
  if (!contains(bits)) {
    throw Error(Errc::InvalidArgument,
                to_hex(bits) + " does not fit F_2^" + std::to_string(n_));
  }
  return FieldElement(shared_from_this(), static_cast<Bits>(bits));
}

FieldElement FieldSpec::zero() const { return element(0); }
FieldElement FieldSpec::one() const { return element(1); }

FieldElement::FieldElement(FieldPtr field, Bits bits) : field_(std::move(field)), bits_(bits) {
  if (!field_->contains(bits)) {
    throw Error(Errc::InvalidArgument, to_hex(bits) + " does not fit F_2^" +
                                           std::to_string(field_->degree()));
  }
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_ptr(), a.field().add(a.bits(), b.bits())};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_ptr(), a.field().mul(a.bits(), b.bits())};
}

FieldElement inv(const FieldElement& a) { return {a.field_ptr(), a.field().inv(a.bits())}; }

FieldElement pow(const FieldElement& a, const ExtExponent& e) {
  return {a.field_ptr(), a.field().pow(a.bits(), e)};
}

FieldElement frobenius(const FieldElement& a, unsigned j) {
  return {a.field_ptr(), a.field().frobenius(a.bits(), j)};
}

FieldElement sqrt(const FieldElement& a) { return {a.field_ptr(), a.field().sqrt(a.bits())}; }

FieldElement trace(const FieldElement& a, unsigned k) {
  return {a.field_ptr(), a.field().trace(a.bits(), k)};
}

FieldElement cube_root_of_unity(const FieldPtr& field) {
  return {field, field->cube_root_of_unity()};
}

FieldElement fractional_power(const FieldElement& a, const ExtExponent& num,
                              const ExtExponent& den) {
  return {a.field_ptr(), a.field().fractional_power(a.bits(), num, den)};
}

std::string to_hex(std::uint64_t bits) {
  std::array<char, 20> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), bits, 16);
  return "0x" + std::string(buf.data(), res.ptr);
}

std::uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::InvalidArgument, "not a hexadecimal value: '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t normalize_modulus(unsigned n, std::uint64_t value) {
  if (n < gf2poly::kMinDegree || n > gf2poly::kMaxDegree) {
    throw Error(Errc::UnsupportedDegree,
                "field degree " + std::to_string(n) + " outside [2, 32]");
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  if (value < top) value |= top;
  if (gf2poly::degree(value) != static_cast<int>(n) || !gf2poly::is_irreducible(value)) {
    throw Error(Errc::InvalidModulus,
                to_hex(value) + " is not an irreducible polynomial of degree " +
                    std::to_string(n));
  }
  return value;
}

}  // namespace trinom
