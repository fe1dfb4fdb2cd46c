#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trinom/field.hpp"

namespace trinom {

/// c * x^(2^power).
struct LinearTerm {
  unsigned power;
  Bits coeff;
};

/// x -> sum_j c_j x^(2^j), an F_2-linear map of the field. Powers are taken
/// mod n and terms sharing a power are merged, so at most one term per
/// power in [0, n) survives and zero coefficients are dropped.
class LinearizedPoly {
 public:
  LinearizedPoly(FieldPtr field, std::vector<LinearTerm> terms);
  static LinearizedPoly identity(FieldPtr field) { return {std::move(field), {{0, 1}}}; }

  const std::vector<LinearTerm>& terms() const noexcept { return terms_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Bits operator()(Bits x) const noexcept;

 private:
  FieldPtr field_;
  std::vector<LinearTerm> terms_;  // ascending power
};

/// n x n matrix over F_2 stored by columns: column i is the image of X^i.
class BitMatrix {
 public:
  explicit BitMatrix(std::vector<Bits> columns);
  static BitMatrix identity(unsigned n);
  static BitMatrix zero(unsigned n);

  unsigned dimension() const noexcept { return static_cast<unsigned>(columns_.size()); }
  Bits column(unsigned i) const { return columns_.at(i); }
  bool at(unsigned row, unsigned col) const { return (columns_.at(col) >> row) & 1; }
  Bits apply(Bits x) const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Bits> columns_;
};

/// Empty when `particular` is absent; otherwise particular + span(kernel_basis).
struct AffineSolutionSet {
  std::optional<Bits> particular;
  std::vector<Bits> kernel_basis;

  bool empty() const noexcept { return !particular.has_value(); }
  std::uint64_t size() const noexcept {
    return empty() ? 0 : std::uint64_t{1} << kernel_basis.size();
  }
  bool contains(Bits x) const;
  /// All members in ascending order.
  std::vector<Bits> elements() const;
};

BitMatrix matrix_of(const LinearizedPoly& L);
Bits eval(const LinearizedPoly& L, Bits x);
FieldElement eval(const LinearizedPoly& L, const FieldElement& x);

/// Null-space basis. Pivots are chosen at the lowest free index, so the basis
/// is reproducible: one vector per non-pivot column, ascending.
std::vector<Bits> kernel(const BitMatrix& M);

/// {x : M x = b}.
AffineSolutionSet solve(const BitMatrix& M, Bits b);
/// {x : L(x) = b}.
AffineSolutionSet solve_affine(const LinearizedPoly& L, Bits b);

/// Whether v lies in the F_2-span of `basis`.
bool in_span(const std::vector<Bits>& basis, Bits v);

}  // namespace trinom
