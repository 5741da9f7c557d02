#include "euclab/report_json.hpp"

namespace euclab {

using nlohmann::json;

namespace {

json interval_json(const Interval& i) { return {{"lower", rational_json(i.lower)}, {"upper", rational_json(i.upper)}}; }

json window_json(const CostWindow& w) {
  return {{"center", rational_json(w.center)},
          {"lemma_lower", rational_json(w.lemma_lower)},
          {"lemma_upper", rational_json(w.lemma_upper)},
          {"thm_lower", rational_json(w.thm_lower)},
          {"thm_upper", rational_json(w.thm_upper)}};
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? rational_json(*x) : json(nullptr);
}

}  // namespace

json rational_json(const Rational& x) { return {{"fraction", fraction_string(x)}, {"value", to_double(x)}}; }

json poly_json(const Poly& p) {
  json c = json::array();
  for (auto x : p.coeffs()) c.push_back(x.value);
  return {{"coeffs", c}, {"text", poly_pretty(p)}};
}

json to_json(const EuclidTrace& t) {
  json rems = json::array();
  for (const auto& r : t.remainders) rems.push_back(poly_format(r));
  json quos = json::array();
  for (const auto& q : t.quotients) quos.push_back(poly_format(q));
  return {{"length", t.length()},
          {"degree_sequence", t.degree_sequence},
          {"remainders", rems},
          {"quotients", quos},
          {"gcd", poly_format(t.gcd)},
          {"gcd_degree", t.gcd_degree},
          {"t_polydiv", t.t_polydiv},
          {"t_fielddiv", t.t_fielddiv},
          {"t_addmul", t.t_addmul}};
}

json to_json(const FactorProfile& p) {
  json layers = json::array();
  for (const auto& l : p.layers) layers.push_back({{"multiplicity", l.multiplicity}, {"factor", poly_format(l.factor)}});
  json dm = json::array();
  for (const auto& [key, count] : p.degree_multiplicity)
    dm.push_back({{"degree", key.first}, {"multiplicity", key.second}, {"count", count}});
  return {{"degree", p.degree},
          {"lambda", p.lambda},
          {"lambda_star", p.lambda_star},
          {"k", p.k},
          {"squarefree", p.squarefree()},
          {"layers", layers},
          {"factors", dm}};
}

json to_json(const MainTerms& m) {
  return {{"E_g", rational_json(m.E_g)},
          {"P0", rational_json(m.P0)},
          {"PG", rational_json(m.PG)},
          {"k_exceeds_d", m.k_exceeds_d}};
}

json to_json(const BoundReport& r) {
  json j = {{"q", r.q},
            {"e", r.e},
            {"d", r.d},
            {"k", r.k},
            {"main", to_json(r.main)},
            {"preconditions",
             {{"k_le_d", r.pre.k_le_d}, {"q_large", r.pre.q_large}, {"q_exceeds_2e", r.pre.q_exceeds_2e}}},
            {"cost",
             {{"polydiv", window_json(r.cost.polydiv)},
              {"fielddiv", window_json(r.cost.fielddiv)},
              {"addmul", window_json(r.cost.addmul)},
              {"theorem_applies", r.cost.theorem_applies}}},
            {"generic_count_lower", rational_json(r.generic_lower)},
            {"union_bounds", nullptr},
            {"coprime_bounds", nullptr},
            {"avgdeg_bounds", nullptr}};
  if (r.union_bounds) j["union_bounds"] = interval_json(*r.union_bounds);
  if (r.coprime) {
    j["coprime_bounds"] = interval_json(r.coprime->bounds);
    j["coprime_bounds"]["in_unit_interval"] = r.coprime->in_unit_interval;
  }
  if (r.avgdeg) {
    j["avgdeg_bounds"] = interval_json(r.avgdeg->bounds);
    j["avgdeg_bounds"]["upper_eta"] = rational_json(r.avgdeg->upper_eta);
    j["avgdeg_bounds"]["simple_upper"] = rational_json(r.avgdeg->simple_upper);
  }
  return j;
}

json to_json(const CensusReport& r) {
  return {{"q", r.q},
          {"e", r.e},
          {"d", r.d},
          {"g", poly_json(r.g)},
          {"total", r.total},
          {"B", r.B},
          {"union_from", r.union_from},
          {"generic_count", r.generic_count},
          {"E_X", rational_json(r.E_X)},
          {"P0", rational_json(r.P0)},
          {"E_t",
           {{"polydiv", rational_json(r.E_polydiv)},
            {"fielddiv", rational_json(r.E_fielddiv)},
            {"addmul", rational_json(r.E_addmul)}}}};
}

json to_json(const SampleReport& r) {
  return {{"q", r.q},
          {"e", r.e},
          {"d", r.d},
          {"n", r.n},
          {"seed", r.seed},
          {"mode", r.mode == SamplingMode::Random ? "random" : "enumerate"},
          {"profile", to_json(r.profile)},
          {"main", to_json(r.main)},
          {"mu", rational_json(r.mu)},
          {"beta", rational_json(r.beta)},
          {"gamma", rational_json(r.gamma)},
          {"eps1_rel", optional_json(r.eps1_rel)},
          {"eps1_abs", rational_json(r.eps1_abs)},
          {"eps2", optional_json(r.eps2)}};
}

json to_json(const GenericLeadSet& s) {
  json leads = json::array();
  for (const auto& l : s.leads) {
    leads.push_back({{"k", l.k},
                     {"G", to_string(l.poly)},
                     {"total_degree", l.poly.total_degree()},
                     {"monic_scalar", l.monic_scalar.value},
                     {"euclid_scalar", l.euclid_scalar ? json(l.euclid_scalar->value) : json(nullptr)}});
  }
  return {{"q", s.q}, {"e", s.e}, {"d", s.d}, {"g", poly_json(s.g)}, {"leads", leads}};
}

}  // namespace euclab
