#include "cpd/report.hpp"

namespace cpd
{

using nlohmann::json;

json witness_json(FiniteGroup const &g, SubgroupHandle const &h, std::string const &role)
{
  json gens = json::array();
  for (auto x : h.generators())
    gens.push_back(g.describe(x));
  return {{"role", role}, {"order", h.order()}, {"generators", gens}};
}

json to_json(FiniteGroup const &g, CpdVerdict const &v)
{
  json j;
  j["verdict"] = v.is_cpd;
  j["nontrivial"] = v.nontrivial;
  j["method"] = to_string(v.method);
  j["case"] = !v.nontrivial ? "vacuous" : v.is_cpd ? "member" : "not_member";
  j["p"] = v.pd.p;
  j["d"] = v.pd.d;
  j["n"] = p_part(g.order(), v.pd.p).d;
  j["e"] = nullptr;
  j["t"] = nullptr;
  json witnesses = json::array();
  if (v.uncomplemented_witness)
    witnesses.push_back(witness_json(g, *v.uncomplemented_witness, "uncomplemented"));
  for (auto const &entry : v.complement_table) {
    json w = witness_json(g, entry.complement, "complement");
    w["of"] = witness_json(g, entry.subgroup, "subgroup");
    witnesses.push_back(std::move(w));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(FiniteGroup const &g, ClassificationReport const &r)
{
  json j;
  j["verdict"] = r.member;
  j["nontrivial"] = r.kind != CaseKind::Vacuous;
  j["method"] = to_string(r.method);
  j["case"] = to_string(r.kind);
  j["necessary_only"] = r.necessary_only;
  j["reason"] = r.reason;
  j["p"] = r.p;
  j["d"] = r.d;
  j["n"] = r.n;
  j["e"] = r.e ? json(r.e) : json(nullptr);
  j["t"] = r.t ? json(r.t) : json(nullptr);
  if (r.method == Method::FrattiniQuotient)
    j["s"] = r.s;
  j["component_dims"] = r.component_dims;
  j["acting_group_cyclic"] = r.acting_group_cyclic;
  json witnesses = json::array();
  if (r.sylow)
    witnesses.push_back(witness_json(g, *r.sylow, "sylow"));
  if (r.hall)
    witnesses.push_back(witness_json(g, *r.hall, "hall"));
  j["witnesses"] = std::move(witnesses);
  return j;
}

json strip_timings(json j)
{
  if (j.is_object()) {
    j.erase("timings_ms");
    for (auto &[key, value] : j.items())
      value = strip_timings(std::move(value));
  } else if (j.is_array()) {
    for (auto &value : j)
      value = strip_timings(std::move(value));
  }
  return j;
}

} // namespace cpd
