#include "trinom/linalg2.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace trinom {

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<LinearTerm> terms)
    : field_(std::move(field)) {
  const unsigned n = field_->degree();
  std::array<Bits, gf2poly::kMaxDegree> merged{};
  for (const auto& t : terms) {
    if (!field_->contains(t.coeff)) {
      throw Error(Errc::InvalidArgument, "coefficient " + to_hex(t.coeff) + " outside field");
    }
    merged[t.power % n] ^= t.coeff;
  }
  for (unsigned j = 0; j < n; ++j) {
    if (merged[j] != 0) terms_.push_back({j, merged[j]});
  }
}

Bits LinearizedPoly::operator()(Bits x) const noexcept {
  Bits acc = 0;
  for (const auto& t : terms_) acc ^= field_->mul(t.coeff, field_->frobenius(x, t.power));
  return acc;
}

BitMatrix::BitMatrix(std::vector<Bits> columns) : columns_(std::move(columns)) {
  const auto n = columns_.size();
  if (n == 0 || n > gf2poly::kMaxDegree) {
    throw Error(Errc::InvalidArgument, "matrix dimension must be in [1, 32]");
  }
  for (Bits c : columns_) {
    if (n < 32 && (c >> n) != 0) {
      throw Error(Errc::InvalidArgument, "column " + to_hex(c) + " exceeds dimension");
    }
  }
}

BitMatrix BitMatrix::identity(unsigned n) {
  std::vector<Bits> cols(n);
  for (unsigned i = 0; i < n; ++i) cols[i] = Bits{1} << i;
  return BitMatrix(std::move(cols));
}

BitMatrix BitMatrix::zero(unsigned n) { return BitMatrix(std::vector<Bits>(n, 0)); }

Bits BitMatrix::apply(Bits x) const noexcept {
  Bits acc = 0;
  for (unsigned i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1) acc ^= columns_[i];
  }
  return acc;
}

bool AffineSolutionSet::contains(Bits x) const {
  return particular.has_value() && in_span(kernel_basis, x ^ *particular);
}

std::vector<Bits> AffineSolutionSet::elements() const {
  std::vector<Bits> out;
  if (empty()) return out;
  const std::uint64_t count = size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Bits v = *particular;
    for (std::size_t i = 0; i < kernel_basis.size(); ++i) {
      if ((mask >> i) & 1) v ^= kernel_basis[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BitMatrix matrix_of(const LinearizedPoly& L) {
  const unsigned n = L.field().degree();
  std::vector<Bits> cols(n);
  for (unsigned i = 0; i < n; ++i) cols[i] = L(Bits{1} << i);
  return BitMatrix(std::move(cols));
}

Bits eval(const LinearizedPoly& L, Bits x) { return L(x); }

FieldElement eval(const LinearizedPoly& L, const FieldElement& x) {
  if (!x.field().same_as(L.field())) {
    throw Error(Errc::FieldMismatch, "argument and map live in different fields");
  }
  return {L.field_ptr(), L(x.bits())};
}

namespace {

// Row-echelon form of the augmented system [M | b]. Row r holds the
// coefficients of equation r in bits 0..n-1 and the right-hand side in bit n.
struct Echelon {
  std::vector<std::uint64_t> rows;
  std::vector<unsigned> pivot_cols;  // pivot_cols[i] is the pivot of rows[i]
  bool consistent = true;
};

Echelon reduce(const BitMatrix& M, Bits b) {
  const unsigned n = M.dimension();
  const std::uint64_t rhs_bit = std::uint64_t{1} << n;
  Echelon e;
  e.rows.assign(n, 0);
  for (unsigned c = 0; c < n; ++c) {
    const Bits col = M.column(c);
    for (unsigned r = 0; r < n; ++r) {
      if ((col >> r) & 1) e.rows[r] |= std::uint64_t{1} << c;
    }
  }
  for (unsigned r = 0; r < n; ++r) {
    if ((b >> r) & 1) e.rows[r] |= rhs_bit;
  }

  unsigned rank = 0;
  for (unsigned c = 0; c < n && rank < n; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    unsigned pivot = rank;
    while (pivot < n && !(e.rows[pivot] & bit)) ++pivot;
    if (pivot == n) continue;
    std::swap(e.rows[rank], e.rows[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != rank && (e.rows[r] & bit)) e.rows[r] ^= e.rows[rank];
    }
    e.pivot_cols.push_back(c);
    ++rank;
  }
  for (unsigned r = rank; r < n; ++r) {
    if (e.rows[r] & rhs_bit) e.consistent = false;
  }
  e.rows.resize(rank);
  return e;
}

std::vector<Bits> kernel_from(const Echelon& e, unsigned n) {
  std::vector<bool> is_pivot(n, false);
  for (unsigned c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Bits> basis;
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Bits v = Bits{1} << f;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if ((e.rows[i] >> f) & 1) v |= Bits{1} << e.pivot_cols[i];
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::vector<Bits> kernel(const BitMatrix& M) {
  return kernel_from(reduce(M, 0), M.dimension());
}

AffineSolutionSet solve(const BitMatrix& M, Bits b) {
  const unsigned n = M.dimension();
  const Echelon e = reduce(M, b);
  AffineSolutionSet out;
  if (!e.consistent) return out;
  Bits x = 0;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if ((e.rows[i] >> n) & 1) x |= Bits{1} << e.pivot_cols[i];
  }
  out.particular = x;
  out.kernel_basis = kernel_from(e, n);
  return out;
}

AffineSolutionSet solve_affine(const LinearizedPoly& L, Bits b) {
  if (!L.field().contains(b)) {
    throw Error(Errc::InvalidArgument, "right-hand side " + to_hex(b) + " outside field");
  }
  return solve(matrix_of(L), b);
}

bool in_span(const std::vector<Bits>& basis, Bits v) {
  // Insert into an xor basis keyed by leading bit, then reduce v.
  std::array<Bits, 32> lead{};
  for (Bits x : basis) {
    for (int hb = std::bit_width(x) - 1; x != 0; hb = std::bit_width(x) - 1) {
      if (lead[hb] == 0) {
        lead[hb] = x;
        break;
      }
      x ^= lead[hb];
    }
  }
  for (int hb = std::bit_width(v) - 1; v != 0; hb = std::bit_width(v) - 1) {
    if (lead[hb] == 0) return false;
    v ^= lead[hb];
  }
  return true;
}

}  // namespace trinom
