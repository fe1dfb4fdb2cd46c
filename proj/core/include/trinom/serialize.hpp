#pragma once

#include <nlohmann/json.hpp>

#include "trinom/families.hpp"
#include "trinom/inverter.hpp"
#include "trinom/permcheck.hpp"

namespace trinom {

using Json = nlohmann::ordered_json;

/// {id, k, m, n, modulus, exponents: [decimal strings]}; m is null outside F6.
Json to_json(const FamilyInstance& inst);

/// {is_permutation, missing_count, fixed_points, witness?, cycle_type?}
/// with witness as [hex, hex] and cycle_type as [[length, count], ...].
Json to_json(const PermutationReport& report);

/// Every populated trace field, elements as hex.
Json to_json(const InversionTrace& trace);

Json to_json(const std::vector<GcdIdentity>& identities);

}  // namespace trinom
