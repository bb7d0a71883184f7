#include "laurmon/report.hpp"

#include <sstream>

namespace laurmon {

using nlohmann::json;

namespace {

json terms_json(const std::vector<std::pair<int, Rational>>& terms) {
  json out = json::array();
  for (const auto& [e, c] : terms) out.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
  return out;
}

json laurent_json(const IntLaurentPoly& f, const std::string& text) {
  std::vector<std::pair<int, Rational>> terms;
  for (int e : f.support()) terms.emplace_back(e, Rational(f.coeff(e)));
  return {{"text", text}, {"terms", terms_json(terms)}};
}

// The unit witness g cleared of negative exponents: x^k = x^k g.
json identity_json(const NatLaurentPoly& g) {
  const int k = g.is_zero() ? 0 : std::max(0, -g.min_exponent());
  return {{"lhs", to_json(NatLaurentPoly::monomial(1, k))}, {"rhs", to_json(g.shifted(k))}};
}

}  // namespace

json to_json(const QPoly& f) {
  std::vector<std::pair<int, Rational>> terms;
  for (int e = 0; e <= f.degree(); ++e)
    if (f.coeff(e) != 0) terms.emplace_back(e, f.coeff(e));
  return {{"text", to_string(f)}, {"terms", terms_json(terms)}};
}

json to_json(const IntLaurentPoly& f) { return laurent_json(f, to_string(f)); }
json to_json(const NatLaurentPoly& f) { return laurent_json(f.as_int(), to_string(f)); }

json to_json(const Interval& i) { return {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}}; }

json to_json(const AlgebraicReal& a) {
  return {{"min_poly", to_json(a.min_poly())}, {"isolating_interval", to_json(a.interval())}};
}

json to_json(const MinimalPair& pair) {
  return {{"p", to_json(pair.p)}, {"q", to_json(pair.q)}, {"ell", to_string(pair.ell)}};
}

json to_json(const SearchBudget& b) {
  return {{"exponent_window", b.exponent_window},
          {"coeff_bound", to_string(b.coeff_bound)},
          {"node_limit", b.node_limit}};
}

json to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnitWitness>) {
          return {{"kind", "unit_representation"}, {"g", to_json(x.g)}, {"identity", identity_json(x.g)}};
        } else if constexpr (std::is_same_v<T, MonomialRelation>) {
          return {{"kind", "monic_monomial"},
                  {"component", x.p_is_monomial ? "p" : "q"},
                  {"monomial", to_json(NatLaurentPoly::monomial(1, x.exponent))},
                  {"equals", to_json(x.other)},
                  {"unit_representation", to_json(x.unit().g)}};
        } else {
          return {{"kind", "accp_obstruction"},
                  {"pair", to_json(x.pair)},
                  {"pair_of", x.on_reciprocal ? "1/alpha" : "alpha"},
                  {"Q", to_json(x.Q)},
                  {"residue", to_json(x.residue)}};
        }
      },
      w);
}

json to_json(const Verdict& v) {
  return {{"status", to_string(v.status)},
          {"rule", v.rule},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
          {"budget_used", v.budget_used ? to_json(*v.budget_used) : json(nullptr)},
          {"nodes", v.nodes}};
}

json to_json(const AccpChainWitness& w) {
  json terms = json::array();
  for (std::size_t n = 0; n < w.chain_terms.size(); ++n)
    terms.push_back({{"n", n + 1}, {"a", to_json(w.chain_terms[n].first)}, {"b", to_json(w.chain_terms[n].second)}});
  return {{"Q", to_json(w.Q)}, {"r", to_json(w.r)}, {"terms", terms}, {"verified", true}};
}

json to_json(const Factorization& f) {
  return {{"multiplicities", to_json(f.multiplicities)}, {"length", to_string(f.length)}};
}

json to_json(const ElasticityWitness& w) {
  return {{"n", w.n},
          {"element", to_json(w.element)},
          {"p_length", to_string(w.p_length)},
          {"q_length", to_string(w.q_length)}};
}

json to_json(const ClassificationReport& r) {
  json out;
  out["alpha_kind"] = to_string(r.kind);
  out["minimal_pair"] = r.pair ? to_json(*r.pair) : json(nullptr);
  out["monic_monomial_check"] = {
      {"ran", r.monic_monomial_checked},
      {"result", r.monic_monomial ? to_json(Witness{*r.monic_monomial}) : json(nullptr)}};
  out["atomic"] = to_json(r.atomic);
  out["accp"] = to_json(r.accp);
  out["bfm"] = to_json(r.bfm);
  out["ffm"] = to_json(r.ffm);
  out["ufm"] = to_json(r.ufm);
  out["hfm"] = to_json(r.hfm);
  out["lfm"] = to_json(r.lfm);
  out["elasticity"] = {{"class", to_string(r.elasticity)}, {"rule", r.elasticity_rule}};
  out["accp_chain"] = r.accp_chain ? to_json(*r.accp_chain) : json(nullptr);
  if (r.lfm_pair)
    out["lfm_pair"] = {{"z1", to_json(r.lfm_pair->first)}, {"z2", to_json(r.lfm_pair->second)}};
  else
    out["lfm_pair"] = nullptr;
  json ew = json::array();
  for (const auto& w : r.elasticity_witnesses) ew.push_back(to_json(w));
  out["elasticity_witnesses"] = ew;
  out["hierarchy_violations"] = hierarchy_violations(r);
  return out;
}

json to_json(const EmbeddingBox& box) {
  json caps = json::array();
  for (int e = box.min_exponent; e <= box.max_exponent; ++e)
    caps.push_back({{"exponent", e}, {"cap", to_string(box.cap(e))}});
  return {{"v1", to_json(box.v1)},
          {"v2", to_json(box.v2)},
          {"window", {box.min_exponent, box.max_exponent}},
          {"caps", caps}};
}

json to_json(const FactorizationSet& fs) {
  json list = json::array();
  for (const auto& f : fs.factorizations) list.push_back(to_json(f));
  json lengths = json::array();
  for (const auto& l : length_set(fs)) lengths.push_back(to_string(l));
  json elasticity = nullptr;
  if (!fs.factorizations.empty()) {
    auto e = elasticity_of_element(fs);
    elasticity = {{"value", to_string(e.value)}, {"exact", e.exact}};
  }
  return {{"element", {{"repr", to_json(fs.element.repr())}, {"canonical", to_json(fs.element.canonical())}}},
          {"complete", fs.complete},
          {"budget_exhausted", fs.budget_exhausted},
          {"count", fs.factorizations.size()},
          {"factorizations", list},
          {"length_set", lengths},
          {"elasticity", elasticity}};
}

std::string flatten(const json& doc) {
  std::ostringstream os;
  auto walk = [&](auto&& self, const json& j, const std::string& path) -> void {
    if (j.is_object() && !j.empty()) {
      for (const auto& [k, v] : j.items()) self(self, v, path.empty() ? k : path + "." + k);
    } else if (j.is_array() && !j.empty()) {
      for (std::size_t i = 0; i < j.size(); ++i) self(self, j[i], path + "[" + std::to_string(i) + "]");
    } else {
      os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
  };
  walk(walk, doc, "");
  return os.str();
}

}  // namespace laurmon
