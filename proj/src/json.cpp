#include "msf/json.hpp"

namespace msf::json {

Json group(const GroupSpec& g) {
  return Json{{"spec", g.to_string()}, {"orders", g.orders()}, {"order", g.order()}};
}

Json certified(const Certified& c) {
  Json j{{"exact", c.exact()}, {"lower", to_decimal(c.lower)}, {"upper", to_decimal(c.upper)}};
  j["approx"] = c.approx_string();
  return j;
}

Json element_set(const ElementSet& s) { return Json(s.indices()); }

Json census(const ComponentSummary& s) {
  Json j = Json::object();
  for (const auto& [label, count] : s.counts) j[label] = count;
  return j;
}

Json count_report(const CountReport& r, bool timings) {
  Json j{{"group", r.group.to_string()},
         {"quantity", to_string(r.quantity)},
         {"value", to_decimal(r.value)},
         {"method", to_string(r.method)}};
  if (r.method == Method::kExhaustive) j["nodes"] = r.nodes;
  if (!r.formula.empty()) j["formula"] = r.formula;
  if (timings) j["elapsed_s"] = r.elapsed.count();
  return j;
}

Json graph_summary(const LoopGraph& g) {
  const DegreeProfile p = degree_profile(g);
  return Json{{"vertices", g.size()},  {"edges", g.edge_count()},    {"loops", g.loop_count()},
              {"min_degree", p.min_degree}, {"max_degree", p.max_degree}, {"census", census(summarize(g))},
              {"fingerprint", fingerprint(g)}};
}

Json mis_count(const MisCount& m) {
  Json comps = Json::array();
  for (const ComponentCount& c : m.components) {
    comps.push_back({{"label", c.label}, {"count", to_decimal(c.count)}, {"multiplicity", c.multiplicity}});
  }
  return Json{{"fingerprint", m.fingerprint}, {"count", to_decimal(m.count)}, {"components", comps}};
}

Json construction(const ConstructionReport& r) {
  Json j{{"family", to_string(r.family)},
         {"case", r.case_label},
         {"group", r.group.to_string()},
         {"B", element_set(r.B)},
         {"S", element_set(r.S)},
         {"distinct", r.distinct},
         {"census", census(r.link)},
         {"mis_exact", to_decimal(r.mis_exact)},
         {"predicted", certified(r.predicted)},
         {"comparison", r.exact_formula ? "equal" : "at_least"},
         {"match", r.match}};
  j["generates"] = r.generates ? Json(*r.generates) : Json(nullptr);
  j["exhaustive"] = r.exhaustive ? Json(to_decimal(*r.exhaustive)) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json cyclic(const CyclicConstruction& c) {
  Json j{{"m", c.m}, {"k", c.k}, {"i", c.i}, {"case", c.case_label}};
  j["mis"] = {to_decimal(c.mis_gamma), to_decimal(c.mis_prime), to_decimal(c.mis_rtimes)};
  if (c.closed_form) {
    j["closed_form"] = {to_decimal((*c.closed_form)[0]), to_decimal((*c.closed_form)[1]),
                        to_decimal((*c.closed_form)[2])};
  } else {
    j["closed_form"] = nullptr;
  }
  j["match"] = c.match;
  j["report"] = construction(c.report);
  return j;
}

Json product_bound(const ProductLowerBound& p) {
  Json j{{"bound", certified(p.bound)}};
  j["witness"] = p.witness ? construction(*p.witness) : Json(nullptr);
  j["product_formula"] = p.product_formula ? Json(to_decimal(*p.product_formula)) : Json(nullptr);
  j["witness_omitted"] = p.witness_omitted;
  if (p.witness_omitted) j["omitted_reason"] = p.omitted_reason;
  return j;
}

Json prop34(std::uint64_t m, std::uint64_t n, const Prop34Result& r) {
  return Json{{"m", m}, {"n", n}, {"holds", r.holds}, {"margin", certified(r.margin)}, {"precision", r.precision}};
}

Json overcount(const std::string& group, const OvercountResult& r) {
  return Json{{"group", group},         {"pairs", r.pairs}, {"pair_pairs", r.pair_pairs},
              {"max_shared", r.max_shared}, {"bound", r.bound}, {"holds", r.holds}};
}

Json verification(const VerificationOutcome& v, bool timings) {
  Json facts = Json::object();
  for (const auto& [k, val] : v.facts) facts[k] = val;
  Json j{{"check", v.check},       {"group", v.group},
         {"pass", v.pass()},       {"universe", v.universe},
         {"counterexamples", v.counterexamples}, {"facts", facts}};
  if (!v.witnesses.empty()) j["witnesses"] = v.witnesses;
  if (timings) j["elapsed_s"] = v.elapsed.count();
  return j;
}

}  // namespace msf::json
