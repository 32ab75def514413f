#include "polyspace/json_io.hpp"

#include <stdexcept>

namespace polyspace {

Json to_json(const LengthVector& lv) {
  Json out = Json::array();
  for (const auto& s : to_strings(lv)) out.push_back(s);
  return out;
}

LengthVector length_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("length vector must be a JSON array");
  std::vector<Rational> entries;
  for (const auto& e : j) {
    if (e.is_string()) entries.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer()) entries.emplace_back(e.get<long long>());
    else throw std::invalid_argument("length entries must be rational strings or integers");
  }
  return LengthVector(std::move(entries));
}

Json masks_to_json(const std::vector<SubsetMask>& masks) {
  Json out = Json::array();
  for (SubsetMask s : masks) out.push_back(to_hex(s));
  return out;
}

std::vector<SubsetMask> masks_from_json(const Json& j) {
  std::vector<SubsetMask> out;
  for (const auto& e : j) out.push_back(parse_hex(e.get<std::string>()));
  return out;
}

Json to_json(const SignatureFamily& sig) {
  return Json{{"n", sig.n},
              {"generic", sig.generic},
              {"short_without_n", masks_to_json(sig.short_without_n)},
              {"short_with_n", masks_to_json(sig.short_with_n)},
              {"median_with_n", masks_to_json(sig.median_with_n)},
              {"sorting", sig.sorting.image()}};
}

Json to_json(const BettiTable& t) { return Json{{"b", t.b}, {"a", t.a}, {"a_tilde", t.a_tilde}}; }

Json to_json(const BalancedPresentation& p) {
  Json gens = Json::array();
  for (SubsetMask s : p.minimal_monomials) gens.push_back(to_index_list(s));
  return Json{{"n", p.n},
              {"generators", p.num_generators},
              {"ideal", gens},
              {"first_killed", p.first_killed},
              {"ranks", p.ranks()}};
}

Json to_json(const DefectBasis& d) {
  Json by = Json::object();
  for (const auto& [k, masks] : d.by_degree) {
    Json list = Json::array();
    for (SubsetMask s : masks) list.push_back(to_index_list(s));
    by[std::to_string(k)] = list;
  }
  return Json{{"n", d.n}, {"by_degree", by}};
}

Json to_json(const GradedPresentation& p) {
  auto polys = [](const std::vector<Gf2Polynomial>& ps) {
    Json out = Json::array();
    for (const auto& q : ps) out.push_back(to_string(q));
    return out;
  };
  Json r2 = Json::array();
  for (SubsetMask s : p.r2) r2.push_back(to_string(Gf2Polynomial{Gf2Monomial{0, s}}));
  return Json{{"n", p.n}, {"variable_degree", p.variable_degree}, {"r2", r2}, {"r3", polys(p.r3)}};
}

Json to_json(const SpatialInvariants& s) {
  Json out{{"empty", s.empty}, {"spatial_dims", s.spatial_dims}, {"planar_quotient_dims", s.planar_quotient_dims}};
  out["w1_solution_space_dim"] = s.w1_solution_space_dim ? Json(*s.w1_solution_space_dim) : Json(nullptr);
  out["quotient_dims"] = s.quotient_dims;
  out["killed_variables"] = s.killed_variables;
  out["canonical_quotient_ideal"] = masks_to_json(s.canonical_quotient_ideal);
  return out;
}

Json to_json(const CompareVerdict& v) {
  return Json{{"verdict", v.same_chamber ? (v.generic ? "same chamber" : "same stratum")
                                         : (v.generic ? "different chamber" : "different stratum")},
              {"same", v.same_chamber},
              {"stage", v.stage.empty() ? Json(nullptr) : Json(v.stage)},
              {"stages_run", v.stages_run}};
}

Json to_json(const AuditReport& r, const std::vector<ChamberRecord>& records) {
  auto pairs = [&](const std::vector<AuditCollision>& cs) {
    Json out = Json::array();
    for (const auto& c : cs)
      out.push_back(Json{{"first", to_json(records[c.first].witness)},
                         {"second", to_json(records[c.second].witness)},
                         {"level", c.level}});
    return out;
  };
  return Json{{"n", r.n},
              {"chambers", r.chambers},
              {"main_case", r.main_case},
              {"round_trips", r.round_trips},
              {"round_trip_failures", r.round_trip_failures},
              {"collisions", pairs(r.collisions)},
              {"gf2_collisions", pairs(r.gf2_collisions)},
              {"gf2_skipped_empty", r.gf2_skipped_empty}};
}

Json to_json(const VolumeEstimate& v) {
  return Json{{"n", v.n},
              {"samples", v.samples},
              {"non_normal", v.non_normal},
              {"fraction", v.fraction},
              {"half_width_99", v.half_width_99},
              {"bound", to_string(v.bound)},
              {"below_bound_99", Rational(v.fraction + v.half_width_99) < v.bound}};
}

Json to_json(const ChamberRecord& r) {
  return Json{{"n", r.signature.n},
              {"short_with_n", masks_to_json(r.signature.short_with_n)},
              {"witness", to_json(r.witness)},
              {"normal", r.normal},
              {"betti", r.betti}};
}

ChamberRecord record_from_json(const Json& j) {
  ChamberSignature sig{j.at("n").get<int>(), masks_from_json(j.at("short_with_n"))};
  const LengthVector witness = length_vector_from_json(j.at("witness"));
  ChamberRecord r = make_record(sig, witness);
  if (chamber_signature(witness) != sig) throw std::runtime_error("chamber record: witness does not realize the signature");
  if (r.normal != j.at("normal").get<bool>() || r.betti != j.at("betti").get<std::vector<int>>())
    throw std::runtime_error("chamber record: stored invariants disagree with the witness");
  return r;
}

}  // namespace polyspace
