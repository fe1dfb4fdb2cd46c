#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "trinom/permcheck.hpp"

namespace trinom::cli {

namespace {

struct Trinomial {
  const FieldSpec* field;
  std::uint64_t e1, e2, e3;
  Bits operator()(Bits x) const noexcept {
    if (x == 0) return 0;
    return field->pow_reduced(x, e1) ^ field->pow_reduced(x, e2) ^ field->pow_reduced(x, e3);
  }
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for one triple; independent of which worker visits it.
std::uint64_t triple_seed(std::uint64_t seed, std::uint64_t e1, std::uint64_t e2, std::uint64_t e3) {
  return splitmix64(seed ^ splitmix64((e1 << 42) ^ (e2 << 21) ^ e3));
}

using Triple = std::array<std::uint64_t, 3>;

std::map<Triple, FamilyMatch> family_triples(unsigned n) {
  std::map<Triple, FamilyMatch> out;
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, n)) {
      if (e.n != n) continue;
      // First match wins; later families or parameters with the same triple
      // are the same polynomial.
      out.try_emplace(canonical_triple(instantiate(id, e.params)), FamilyMatch{id, e.params});
    }
  }
  return out;
}

}  // namespace

std::array<std::uint64_t, 3> canonical_triple(const FamilyInstance& inst) {
  const std::uint64_t order = inst.field().group_order();
  Triple t;
  for (int i = 0; i < 3; ++i) t[i] = inst.exponents()[i].mod(order);
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

std::vector<SearchRecord> search(const SearchOptions& opts) {
  if (opts.n < gf2poly::kMinDegree || opts.n > kCheckMaxDegree) {
    throw Error(Errc::UnsupportedDegree, "search degree must be in [2, 28], got " + std::to_string(opts.n));
  }
  if (opts.n > kSearchMaxDegree && !opts.force) {
    throw Error(Errc::BudgetExceeded, "search over n = " + std::to_string(opts.n) +
                                          " exceeds the enumeration budget (n <= " +
                                          std::to_string(kSearchMaxDegree) + "); pass --force");
  }
  if (opts.samples == 0) throw Error(Errc::InvalidArgument, "--samples must be positive");

  auto field = FieldSpec::standard(opts.n);
  const std::uint64_t top = field->size() - 2;  // largest e1
  const auto matches = family_triples(opts.n);

  // Work unit: one value of e1. Rows are buffered per unit and concatenated
  // in order afterwards.
  const std::uint64_t units = top >= 3 ? top - 2 : 0;  // e1 in [3, top]
  std::vector<std::vector<SearchRecord>> buckets(units);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t u = next++; u < units; u = next++) {
      const std::uint64_t e1 = u + 3;
      auto& bucket = buckets[u];
      for (std::uint64_t e2 = 2; e2 < e1; ++e2) {
        for (std::uint64_t e3 = 1; e3 < e2; ++e3) {
          const Trinomial f{field.get(), e1, e2, e3};
          if (quick_reject(f, *field, opts.samples, triple_seed(opts.seed, e1, e2, e3))) continue;
          SearchRecord rec{e1, e2, e3, false, std::nullopt};
          rec.is_permutation =
              check(f, *field, {.threads = 1, .cycle_type = false}).is_permutation;
          if (auto it = matches.find({e1, e2, e3}); it != matches.end()) rec.family_match = it->second;
          bucket.push_back(rec);
        }
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(units, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<SearchRecord> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

void write_csv(const SearchOptions& opts, const std::vector<SearchRecord>& records,
               std::ostream& out) {
  out << "# trinom search n=" << opts.n << " samples=" << opts.samples << " seed=" << opts.seed
      << "\n";
  out << "e1,e2,e3,is_permutation,family,k,m\n";
  for (const auto& r : records) {
    out << r.e1 << ',' << r.e2 << ',' << r.e3 << ',' << (r.is_permutation ? "true" : "false") << ',';
    if (r.family_match) {
      out << to_string(r.family_match->id) << ',' << r.family_match->params.k << ',';
      if (r.family_match->id == FamilyId::F6) out << r.family_match->params.m;
    } else {
      out << ",";
    }
    out << '\n';
  }
}

}  // namespace trinom::cli
