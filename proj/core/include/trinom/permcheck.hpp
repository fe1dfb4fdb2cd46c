#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "trinom/field.hpp"

namespace trinom {

template <class F>
concept FieldMap = requires(const F& f, Bits x) {
  { f(x) } -> std::convertible_to<Bits>;
};

/// x1 < x2 with f(x1) = f(x2).
struct CollisionWitness {
  Bits first;
  Bits second;
  friend bool operator==(const CollisionWitness&, const CollisionWitness&) = default;
};

/// cycle length -> number of cycles of that length.
using CycleType = std::map<std::uint64_t, std::uint64_t>;

struct PermutationReport {
  bool is_permutation = false;
  std::uint64_t domain_size = 0;
  std::uint64_t missing_count = 0;
  std::optional<CollisionWitness> collision_witness;
  std::uint64_t fixed_point_count = 0;
  std::optional<CycleType> cycle_type;  // only for permutations

  friend bool operator==(const PermutationReport&, const PermutationReport&) = default;
};

inline constexpr unsigned kCheckMaxDegree = 28;
inline constexpr unsigned kInverseTableMaxDegree = 20;

struct CheckOptions {
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
  bool override_budget = false;
  bool cycle_type = true;
};

/// Preimage sets of every value, stored CSR-style; each set is ascending.
class InverseTable {
 public:
  InverseTable(std::vector<std::uint64_t> offsets, std::vector<Bits> preimages)
      : offsets_(std::move(offsets)), preimages_(std::move(preimages)) {}

  std::uint64_t domain_size() const noexcept { return preimages_.size(); }
  std::span<const Bits> preimages(Bits a) const {
    return {preimages_.data() + offsets_.at(a), preimages_.data() + offsets_.at(a + 1)};
  }
  bool all_singletons() const noexcept {
    for (std::size_t a = 0; a + 1 < offsets_.size(); ++a) {
      if (offsets_[a + 1] - offsets_[a] != 1) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Bits> preimages_;
};

namespace detail {

unsigned resolve_threads(unsigned requested, std::uint64_t domain);
void check_budget(const FieldSpec& spec, unsigned limit, bool override_budget,
                  const char* what);

/// Runs body(begin, end, chunk_index) over `threads` contiguous chunks of
/// [0, size); chunk i covers a fixed range independent of scheduling.
template <class Body>
void for_chunks(std::uint64_t size, unsigned threads, Body&& body) {
  if (threads <= 1) {
    body(std::uint64_t{0}, size, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t step = (size + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min<std::uint64_t>(size, step * t);
    const std::uint64_t end = std::min<std::uint64_t>(size, begin + step);
    pool.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

// Smallest x2 that repeats an earlier value, paired with that earlier x1.
template <FieldMap F>
std::optional<CollisionWitness> first_collision(const F& f, const FieldSpec& spec) {
  const std::uint64_t size = spec.size();
  std::vector<std::uint64_t> seen((size + 63) / 64, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    const Bits v = f(static_cast<Bits>(x));
    std::uint64_t& word = seen[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (word & bit) {
      for (std::uint64_t y = 0; y < x; ++y) {
        if (f(static_cast<Bits>(y)) == v) {
          return CollisionWitness{static_cast<Bits>(y), static_cast<Bits>(x)};
        }
      }
    }
    word |= bit;
  }
  return std::nullopt;
}

}  // namespace detail

/// Cycle type of a permutation of the field. Throws NotAPermutation.
template <FieldMap F>
CycleType cycle_structure(const F& f, const FieldSpec& spec) {
  const std::uint64_t size = spec.size();
  std::vector<std::uint64_t> visited((size + 63) / 64, 0);
  auto test_and_set = [&](std::uint64_t x) {
    std::uint64_t& word = visited[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    const bool was = word & bit;
    word |= bit;
    return was;
  };
  CycleType type;
  for (std::uint64_t start = 0; start < size; ++start) {
    if (test_and_set(start)) continue;
    std::uint64_t len = 1;
    for (std::uint64_t x = f(static_cast<Bits>(start)); x != start; x = f(static_cast<Bits>(x))) {
      if (test_and_set(x)) {
        throw Error(Errc::NotAPermutation,
                    "map is not a permutation: " + to_hex(x) + " reached twice");
      }
      ++len;
    }
    ++type[len];
  }
  return type;
}

/// Exhaustive bijectivity check over all 2^n inputs. The verdict and
/// diagnostics do not depend on the thread count. Throws BudgetExceeded
/// for n > kCheckMaxDegree unless overridden.
template <FieldMap F>
PermutationReport check(const F& f, const FieldSpec& spec, const CheckOptions& opts = {}) {
  detail::check_budget(spec, kCheckMaxDegree, opts.override_budget, "check");
  const std::uint64_t size = spec.size();
  const unsigned threads = detail::resolve_threads(opts.threads, size);
  const std::uint64_t words = (size + 63) / 64;

  std::vector<std::uint64_t> distinct(threads, 0);
  std::vector<std::uint64_t> fixed(threads, 0);
  if (threads <= 1) {
    std::vector<std::uint64_t> hit(words, 0);
    for (std::uint64_t x = 0; x < size; ++x) {
      const Bits v = f(static_cast<Bits>(x));
      std::uint64_t& word = hit[v >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (v & 63);
      distinct[0] += (word & bit) == 0;
      word |= bit;
      fixed[0] += v == x;
    }
  } else {
    std::vector<std::atomic<std::uint64_t>> hit(words);
    for (auto& w : hit) w.store(0, std::memory_order_relaxed);
    detail::for_chunks(size, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned t) {
      std::uint64_t local_distinct = 0, local_fixed = 0;
      for (std::uint64_t x = begin; x < end; ++x) {
        const Bits v = f(static_cast<Bits>(x));
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        const std::uint64_t prev = hit[v >> 6].fetch_or(bit, std::memory_order_relaxed);
        local_distinct += (prev & bit) == 0;
        local_fixed += v == x;
      }
      distinct[t] = local_distinct;
      fixed[t] = local_fixed;
    });
  }

  PermutationReport report;
  report.domain_size = size;
  std::uint64_t attained = 0;
  for (unsigned t = 0; t < threads; ++t) {
    attained += distinct[t];
    report.fixed_point_count += fixed[t];
  }
  report.missing_count = size - attained;
  report.is_permutation = report.missing_count == 0;
  if (!report.is_permutation) {
    report.collision_witness = detail::first_collision(f, spec);
  } else if (opts.cycle_type) {
    report.cycle_type = cycle_structure(f, spec);
  }
  return report;
}

/// Exact preimage map in one pass. Throws BudgetExceeded for
/// n > kInverseTableMaxDegree unless overridden.
template <FieldMap F>
InverseTable inverse_table(const F& f, const FieldSpec& spec, const CheckOptions& opts = {}) {
  detail::check_budget(spec, kInverseTableMaxDegree, opts.override_budget, "inverse_table");
  const std::uint64_t size = spec.size();
  std::vector<Bits> values(size);
  const unsigned threads = detail::resolve_threads(opts.threads, size);
  detail::for_chunks(size, threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t x = begin; x < end; ++x) values[x] = f(static_cast<Bits>(x));
  });
  std::vector<std::uint64_t> offsets(size + 1, 0);
  for (Bits v : values) ++offsets[v + 1];
  for (std::uint64_t a = 0; a < size; ++a) offsets[a + 1] += offsets[a];
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<Bits> pre(size);
  for (std::uint64_t x = 0; x < size; ++x) pre[cursor[values[x]]++] = static_cast<Bits>(x);
  return InverseTable(std::move(offsets), std::move(pre));
}

/// Pre-filter: evaluates f at `samples` seeded pseudo-random points and
/// reports a collision among them. No witness proves nothing.
template <FieldMap F>
std::optional<CollisionWitness> quick_reject(const F& f, const FieldSpec& spec,
                                             std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(Errc::InvalidArgument, "quick_reject needs at least one sample");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = spec.size() - 1;
  std::vector<std::pair<Bits, Bits>> seen;  // (value, input)
  seen.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Bits x = static_cast<Bits>(rng() & mask);
    seen.emplace_back(f(x), x);
  }
  std::sort(seen.begin(), seen.end());
  std::optional<CollisionWitness> best;
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first != seen[i - 1].first || seen[i].second == seen[i - 1].second) continue;
    const CollisionWitness w{seen[i - 1].second, seen[i].second};
    if (!best || std::pair(w.first, w.second) < std::pair(best->first, best->second)) best = w;
  }
  return best;
}

}  // namespace trinom
