#include "uchain/json_io.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace uchain {

Json to_json(const NormalForm& nf) {
  NormalForm sorted = nf;
  sorted.canonicalize();
  Json one = Json::array();
  for (int g : sorted.one_steps) one.push_back({{"grading", g}});
  Json two = Json::array();
  for (const auto& t : sorted.two_steps) two.push_back({{"grading_a", t.grading_a}, {"exponent", t.exponent}});
  return {{"one_steps", one}, {"two_steps", two}, {"cancelled_pairs", sorted.cancelled_pairs}};
}

Json to_json(const GradedComplex& c, const LaurentChain& x) {
  std::vector<std::pair<std::string, int>> terms;
  for (auto [g, e] : x.terms()) terms.emplace_back(c.generator(g).id, e);
  std::sort(terms.begin(), terms.end());
  Json out = Json::array();
  for (const auto& [id, e] : terms) out.push_back({{"gen", id}, {"exp", e}});
  return out;
}

Json to_json(const GradedComplex& c, const HomologyPresentation& h) {
  Json free = Json::object();
  for (auto [g, r] : h.free_ranks) free[std::to_string(g)] = r;
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back({{"grading", t.grading}, {"exponent", t.exponent}});
  Json basis = Json::array();
  for (const auto& x : h.basis) basis.push_back(to_json(c, x));
  Json dim = h.f2_dimension ? Json(*h.f2_dimension) : Json("infinite");
  return {{"flavor", to_string(h.flavor)}, {"free_ranks", free}, {"torsion", torsion}, {"f2_dimension", dim},
          {"basis", basis}};
}

Json to_json(const LesReport& report) {
  Json joints = Json::array();
  for (const auto& j : report.joints) {
    joints.push_back({{"grading", j.grading},
                      {"space", to_string(j.space)},
                      {"dimension", j.dimension},
                      {"image_in", j.image_in},
                      {"kernel_out", j.kernel_out},
                      {"exact", j.exact}});
  }
  Json ranks = Json::object();
  for (auto [k, r] : report.delta_ranks) ranks[std::to_string(k)] = r;
  return {{"window", report.window},       {"exact", report.exact},
          {"stable", report.stable},       {"matches_normal_form", report.matches_normal_form},
          {"delta_ranks", ranks},          {"joints", joints}};
}

Json to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json entry = {{"seed", f.seed}, {"complex", f.complex_text}, {"map", f.map_text}};
    entry["delta_value"] = f.delta_value ? Json(static_cast<int>(*f.delta_value)) : Json(nullptr);
    entry["oracle_value"] = f.oracle_value ? Json(static_cast<int>(*f.oracle_value)) : Json(nullptr);
    if (!f.error.empty()) entry["error"] = f.error;
    failures.push_back(std::move(entry));
  }
  return {{"campaign_seed", report.campaign_seed},
          {"trials", report.trials},
          {"failures", failures},
          {"elapsed_ms", report.elapsed_ms}};
}

Json to_json(const std::map<int, std::size_t>& betti) {
  Json out = Json::object();
  for (auto [k, b] : betti) out[std::to_string(k)] = b;
  return out;
}

Json error_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"detail", e.detail()}}}};
}

}  // namespace uchain
