/*
   Copyright 2026 The pointless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pointless/report.hpp"

#include <nlohmann/json.hpp>

namespace pointless {

namespace {

using Json = nlohmann::ordered_json;

// Big integers are emitted as strings so that no precision is lost.
std::string big(const mpz_class& v) { return v.get_str(); }

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json j;
  j["place"] = w->place;
  j["degree"] = w->degree;
  j["f"] = w->f;
  j["ramified"] = w->ramified;
  return j;
}

Json report_json(const PointlessReport& r) {
  Json j;
  j["n"] = r.n;
  j["verdict"] = r.verdict;
  j["degree"] = r.degree;
  j["genus"] = big(r.genus);
  j["witness"] = witness_json(r.witness);
  Json tallies = Json::array();
  for (const auto& t : r.tallies)
    tallies.push_back(Json{{"degree", t.degree}, {"places", t.places}, {"min_f_deg", t.min_residue_degree}});
  j["tallies"] = tallies;
  j["places_scanned"] = r.places_scanned;
  j["complete"] = r.complete;
  return j;
}

std::string dump(const Json& j, const JsonOptions& opts) { return j.dump(opts.indent) + "\n"; }

}  // namespace

std::string extension_json(const GeometricExtension& e, int n, const PointlessReport* report, const JsonOptions& opts) {
  const RayClassGroup& g = e.group();
  const PrintOptions po{opts.hex};
  Json j;
  j["q"] = g.field()->q();
  j["n"] = n;
  j["modulus"] = g.modulus().to_string(po);
  Json b0 = Json::array();
  for (const Vec& b : e.b0()) b0.push_back(to_string(g.representative(b), po));
  j["B0"] = b0;
  j["u"] = to_string(g.representative(e.u()), po);
  j["degree"] = e.degree();
  j["genus"] = big(report ? report->genus : genus(e));
  if (report) {
    j["verdict"] = report->verdict;
    j["witness"] = witness_json(report->witness);
    j["scan"] = report_json(*report);
  }
  j["seed"] = g.units().options().seed;
  return dump(j, opts);
}

std::string table_json(const std::vector<TableRowResult>& rows, std::uint64_t seed, const JsonOptions& opts) {
  Json out;
  out["q"] = 2;
  out["seed"] = seed;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["n"] = r.entry.n;
    j["g"] = big(r.entry.g);
    j["d"] = r.entry.d_text;
    j["modulus"] = r.entry.modulus;
    j["S"] = r.entry.split_place;
    j["candidates"] = r.candidates.size();
    Json genera = Json::object();
    for (const auto& [g, c] : r.genus_counts) genera[big(g)] = c;
    j["genus_counts"] = genera;
    j["genus_disagreement"] = r.genus_disagreement;
    j["pointless_candidates"] = r.pointless_candidates;
    if (r.match) {
      const auto& c = r.candidates[*r.match];
      j["match"] = Json{{"B0", c.b0}, {"u", c.u}, {"degree", c.degree}, {"genus", big(c.genus)}};
    } else {
      j["match"] = nullptr;
    }
    j["report"] = r.report ? report_json(*r.report) : Json(nullptr);
    j["pass"] = r.pass;
    if (opts.timings) j["timings"] = Json{{"seconds", r.elapsed_seconds}};
    arr.push_back(j);
  }
  out["rows"] = arr;
  return dump(out, opts);
}

std::string parameters_json(const ParameterChoice& pc, const JsonOptions& opts) {
  Json j;
  j["q"] = pc.q;
  j["n"] = pc.n;
  j["found"] = pc.found;
  j["method"] = pc.method;
  j["l"] = pc.l;
  j["m"] = pc.m;
  j["alpha"] = pc.alpha;
  j["beta"] = pc.beta;
  j["farey"] = Json{{"h", pc.h}, {"k", pc.k}, {"c", pc.c}, {"j", pc.j}, {"step_bound_respected", pc.step_bound_respected}};
  j["d"] = big(pc.d);
  j["inequality_holds"] = pc.inequality_holds;
  j["large_exponent"] = pc.large_exponent;
  j["genus_bound"] = big(pc.genus_bound);
  j["genus_bound_below_2q_qn1"] = pc.genus_bound_below_2q_qn1;
  j["pairs_tried"] = pc.pairs_tried;
  if (!pc.reason.empty()) j["reason"] = pc.reason;
  return dump(j, opts);
}

std::string euler_json(const EulerReport& rep, const JsonOptions& opts) {
  Json j;
  j["q"] = rep.q;
  j["m"] = rep.m;
  j["value"] = big(rep.value);
  Json primes = Json::array();
  for (const auto& p : rep.primes)
    primes.push_back(Json{{"prime", big(p.prime)},
                          {"exponent", p.exponent},
                          {"divides_q_minus_1", p.divides_q_minus_1},
                          {"congruent", p.congruent}});
  j["primes"] = primes;
  j["complete"] = rep.complete;
  j["congruences_hold"] = rep.congruences_hold;
  j["distinct_primes"] = rep.distinct_primes;
  j["count_applies"] = rep.count_applies;
  j["count_holds"] = rep.count_holds;
  j["ok"] = rep.ok();
  return dump(j, opts);
}

std::string bounds_json(const BoundsReport& rep, const JsonOptions& opts) {
  Json j;
  j["q"] = rep.q;
  j["n"] = rep.n;
  j["genus"] = big(rep.genus);
  j["weil_floor"] = big(rep.weil_floor);
  j["respects_floor"] = rep.respects_floor;
  j["ratio_q_n"] = rep.ratio_q_n;
  j["ratio_n_q_n"] = rep.ratio_n_q_n;
  j["within_n_q_n"] = rep.within_desk_bound;
  return dump(j, opts);
}

}  // namespace pointless
