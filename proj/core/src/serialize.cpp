#include "trinom/serialize.hpp"

namespace trinom {

Json to_json(const FamilyInstance& inst) {
  Json j;
  j["id"] = std::string(to_string(inst.id()));
  j["k"] = inst.params().k;
  if (inst.id() == FamilyId::F6) {
    j["m"] = inst.params().m;
  } else {
    j["m"] = nullptr;
  }
  j["n"] = inst.degree();
  j["modulus"] = to_hex(inst.field().modulus());
  Json exps = Json::array();
  for (const auto& e : inst.exponents()) exps.push_back(e.to_string());
  j["exponents"] = std::move(exps);
  if (inst.forced()) j["forced"] = true;
  return j;
}

Json to_json(const PermutationReport& report) {
  Json j;
  j["is_permutation"] = report.is_permutation;
  j["missing_count"] = report.missing_count;
  j["fixed_points"] = report.fixed_point_count;
  if (report.collision_witness) {
    j["witness"] = Json::array({to_hex(report.collision_witness->first),
                                to_hex(report.collision_witness->second)});
  }
  if (report.cycle_type) {
    Json cycles = Json::array();
    for (const auto& [len, count] : *report.cycle_type) cycles.push_back(Json::array({len, count}));
    j["cycle_type"] = std::move(cycles);
  }
  return j;
}

Json to_json(const InversionTrace& tr) {
  Json j;
  j["family"] = std::string(to_string(tr.family));
  j["branch"] = tr.branch;
  j["a"] = to_hex(tr.a);
  j["b"] = to_hex(tr.b);
  j["c"] = to_hex(tr.c);
  j["epsilon"] = to_hex(tr.epsilon);
  auto put = [&j](const char* key, const std::optional<Bits>& v) {
    if (v) j[key] = to_hex(*v);
  };
  put("lambda", tr.lambda);
  put("zeta1", tr.zeta1);
  put("zeta2", tr.zeta2);
  put("alpha", tr.alpha);
  put("beta_coef", tr.beta_coef);
  put("gamma", tr.gamma);
  put("theta_coef", tr.theta_coef);
  put("w", tr.w);
  put("z", tr.z);
  put("t", tr.t);
  put("beta", tr.beta);
  put("theta", tr.theta);
  Json cands = Json::array();
  for (Bits c : tr.candidates) cands.push_back(to_hex(c));
  j["candidates"] = std::move(cands);
  j["chosen"] = to_hex(tr.chosen);
  return j;
}

Json to_json(const std::vector<GcdIdentity>& identities) {
  Json rows = Json::array();
  for (const auto& id : identities) rows.push_back({{"identity", id.name}, {"holds", id.holds}});
  return rows;
}

}  // namespace trinom
