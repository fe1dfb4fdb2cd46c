#include "trinom/permcheck.hpp"

#include <string>

namespace trinom::detail {

unsigned resolve_threads(unsigned requested, std::uint64_t domain) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  // Chunks below a few thousand inputs cost more to spawn than to scan.
  const std::uint64_t useful = std::max<std::uint64_t>(1, domain / 4096);
  return static_cast<unsigned>(std::min<std::uint64_t>(t, useful));
}

void check_budget(const FieldSpec& spec, unsigned limit, bool override_budget, const char* what) {
  if (spec.degree() > limit && !override_budget) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " over F_2^" +
                                          std::to_string(spec.degree()) + " exceeds the n <= " +
                                          std::to_string(limit) + " budget (override to force)");
  }
}

}  // namespace trinom::detail
