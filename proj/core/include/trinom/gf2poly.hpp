#pragma once

// Polynomials over F_2 packed into a machine word: bit i is the coefficient
// of X^i. Everything here is constexpr so the default modulus table can be
// produced by the compiler.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

namespace trinom::gf2poly {

constexpr int degree(std::uint64_t p) noexcept {
  return static_cast<int>(std::bit_width(p)) - 1;
}

/// a * b mod m, with deg a, deg b < deg m <= 63.
constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) noexcept {
  const std::uint64_t top = std::uint64_t{1} << degree(m);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return r;
}

/// Remainder of a modulo m (m != 0).
constexpr std::uint64_t mod(std::uint64_t a, std::uint64_t m) noexcept {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

/// X^(2^j) mod m.
constexpr std::uint64_t x_pow_2j(unsigned j, std::uint64_t m) noexcept {
  std::uint64_t r = mod(2, m);
  for (unsigned i = 0; i < j; ++i) r = mulmod(r, r, m);
  return r;
}

/// Rabin's test: X^(2^d) = X mod p, and gcd(X^(2^(d/q)) - X, p) = 1 for
/// every prime q dividing d = deg p. Supports 1 <= deg p <= 63.
constexpr bool is_irreducible(std::uint64_t p) noexcept {
  const int d = degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((p & 1) == 0) return false;
  if (x_pow_2j(static_cast<unsigned>(d), p) != mod(2, p)) return false;
  int rest = d;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    const std::uint64_t h = x_pow_2j(static_cast<unsigned>(d / q), p) ^ mod(2, p);
    if (gcd(p, h) != 1) return false;
  }
  return true;
}

/// Smallest (as an integer) irreducible polynomial of degree n.
constexpr std::uint64_t least_irreducible(unsigned n) noexcept {
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t p = top | 1; p < (top << 1); p += 2) {
    if (is_irreducible(p)) return p;
  }
  return 0;
}

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 32;

namespace detail {
template <unsigned... Ns>
constexpr std::array<std::uint64_t, sizeof...(Ns)> make_table(
    std::integer_sequence<unsigned, Ns...>) {
  return {least_irreducible(Ns)...};
}
}  // namespace detail

/// Index n holds the default modulus of degree n (entries 0 and 1 unused).
inline constexpr auto kDefaultModuli =
    detail::make_table(std::make_integer_sequence<unsigned, kMaxDegree + 1>{});

static_assert(kDefaultModuli[2] == 0x7);
static_assert(kDefaultModuli[3] == 0xB);
static_assert(kDefaultModuli[4] == 0x13);
static_assert(kDefaultModuli[8] == 0x11B);

}  // namespace trinom::gf2poly
