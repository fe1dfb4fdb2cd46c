#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "trinom/families.hpp"

namespace trinom::cli {

inline constexpr unsigned kSearchMaxDegree = 14;

struct SearchOptions {
  unsigned n = 0;
  std::uint64_t samples = 64;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool force = false;
};

struct FamilyMatch {
  FamilyId id;
  FamilyParams params;
};

struct SearchRecord {
  std::uint64_t e1, e2, e3;
  bool is_permutation;
  std::optional<FamilyMatch> family_match;
};

/// Reduced exponent triple of an instance, sorted descending.
std::array<std::uint64_t, 3> canonical_triple(const FamilyInstance& inst);

/// Records for every triple e1 > e2 > e3 >= 1, e1 <= 2^n - 2, that survives
/// the sampled collision test, in ascending (e1, e2, e3) order. Throws
/// BudgetExceeded for n > kSearchMaxDegree unless forced.
std::vector<SearchRecord> search(const SearchOptions& opts);

/// Comment line, header and one row per record; LF line endings.
void write_csv(const SearchOptions& opts, const std::vector<SearchRecord>& records,
               std::ostream& out);

}  // namespace trinom::cli
