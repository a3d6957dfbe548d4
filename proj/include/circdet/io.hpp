// JSON records for the CLI and the search stream. Integers that can grow are
// written as decimal strings so nothing is ever rounded.
#pragma once

#include <string>

#include <json.hpp>

#include "constructions.hpp"
#include "cyclonorm.hpp"
#include "goodbad.hpp"
#include "membership.hpp"
#include "numberfield.hpp"
#include "search.hpp"

namespace circdet {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) { return to_string(v); }

inline Json coeffs_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_string(c));
  return a;
}

inline Json to_json(const NormProfile& p) {
  Json norms = Json::object();
  for (const auto& [d, v] : p.norms) norms[std::to_string(d)] = to_string(v);
  return Json{{"n", p.n}, {"norms", norms}, {"total", to_string(p.total)}};
}

inline Json to_json(const WitnessCertificate& c) {
  return Json{{"n", c.n},
              {"label", c.label},
              {"poly", render_poly(c.poly)},
              {"coeffs", coeffs_json(c.poly)},
              {"value", to_string(c.claimed)},
              {"profile", to_json(c.profile)}};
}

inline Json to_json(const MembershipVerdict& v) {
  Json j{{"n", v.n},
         {"value", to_string(v.value)},
         {"status", to_string(v.status)},
         {"member", v.member()},
         {"reason", to_string(v.reason)}};
  j["prime"] = v.prime ? Json(*v.prime) : Json(nullptr);
  j["note"] = v.note;
  if (v.witness) {
    j["witness"] = render_poly(v.witness->poly);
    j["profile"] = to_json(v.witness->profile);
  } else {
    j["witness"] = nullptr;
    j["profile"] = nullptr;
  }
  return j;
}

inline Json to_json(const UnitLedger& l) { return Json{{"torsion", l.torsion}, {"exponents", {l.e[0], l.e[1], l.e[2]}}}; }

inline Json to_json(const CanonicalForm& f) {
  return Json{{"form", f.form == FormKind::first ? "first" : "second"},
              {"sign", f.sign},
              {"shift", f.shift},
              {"b", f.b_type == Tag::good ? "1" : "x - 1"},
              {"cofactor", render_poly(f.cofactor)},
              {"unit_ledger", to_json(f.unit_ledger)},
              {"poly", render_poly(f.reconstruct())}};
}

inline Json to_json(const Classification& c) {
  return Json{{"tag", to_string(c.tag)}, {"first", to_json(c.first)}, {"second", to_json(c.second)}};
}

inline Json to_json(const PrimePowerTag& t) {
  return Json{{"p", t.p}, {"exponent", t.exponent}, {"tag", to_string(t.tag)}, {"computed", t.computed}};
}

inline Json to_json(const SplittingData& s) {
  return Json{{"p", s.p}, {"f", s.f}, {"count", s.count}, {"norm_exponent", s.norm_exponent}};
}

inline Json to_json(const EisensteinRep& r) {
  Json j{{"p", r.p},
         {"alpha", r.alpha},
         {"beta", r.beta},
         {"first", {{"a", r.a}, {"b", r.b}, {"A", r.A}, {"B", r.B}, {"poly", render_poly(r.first_poly())}}}};
  if (r.has_second)
    j["second"] = {{"c", r.c}, {"d", r.d}, {"C", r.C}, {"D", r.D}, {"poly", render_poly(r.second_poly())}};
  else
    j["second"] = nullptr;
  return j;
}

inline Json to_json(const UnitTableReport& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines)
    lines.push_back({{"name", l.name},
                     {"is_unit", l.is_unit},
                     {"reciprocity", to_string(l.reciprocity)},
                     {"claimed", to_string(l.claimed)},
                     {"norm", to_string(l.norm)},
                     {"ok", l.ok}});
  return Json{{"n", r.n}, {"lines", lines}, {"expected_rank", r.expected_rank}, {"independent", r.independent}, {"ok", r.ok}};
}

/// One line of the search stream: {n, coeffs, value, norms}.
inline Json to_json(const SearchRecord& r) {
  Json norms = Json::object();
  for (const auto& [d, v] : r.profile.norms) norms[std::to_string(d)] = to_string(v);
  return Json{{"n", r.n}, {"coeffs", r.coeffs}, {"value", to_string(r.value)}, {"norms", norms}};
}

inline SearchRecord search_record_from_json(const Json& j) {
  SearchRecord r;
  r.n = j.at("n").get<long>();
  r.coeffs = j.at("coeffs").get<std::vector<long>>();
  r.value = parse_bigint(j.at("value").get<std::string>());
  r.profile.n = r.n;
  r.profile.total = r.value;
  for (const auto& [k, v] : j.at("norms").items()) r.profile.norms[std::stol(k)] = parse_bigint(v.get<std::string>());
  if (static_cast<long>(r.coeffs.size()) != r.n) throw DomainError("search record: coefficient count differs from n");
  return r;
}

inline Json to_json(const ConsistencyReport& r) {
  auto list = [](const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  return Json{{"n", r.n},
              {"records", r.records},
              {"distinct_values", r.distinct_values},
              {"divisibility_violations", list(r.divisibility_violations)},
              {"rejected", list(r.rejected)},
              {"undecided", list(r.undecided)},
              {"forbidden_hits", list(r.forbidden_hits)},
              {"membership_checked", r.membership_checked},
              {"ok", r.ok()}};
}

}  // namespace circdet
