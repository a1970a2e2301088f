#include "rootline/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rootline {

Json rational_json(const Rational& x) { return Json{{"exact", to_string(x)}, {"decimal", to_decimal(x, 15)}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_object() && j.contains("exact")) return rational_from_json(j.at("exact"));
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json polynomial_json(const ExactPolynomial& p) { return Json{{"coeffs", rationals_json(p.coeffs())}}; }

ExactPolynomial polynomial_from_json(const Json& j) {
  if (j.is_array()) return ExactPolynomial(rationals_from_json(j));
  return ExactPolynomial(rationals_from_json(j.at("coeffs")));
}

Json interval_json(const RootInterval& r) {
  Json out{{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"decimal", to_decimal(r.lo, 15)}};
  if (r.multiplicity != 1) out["multiplicity"] = r.multiplicity;
  return out;
}

SymmetricProfile profile_from_json(const Json& j) {
  SymmetricProfile prof;
  if (j.contains("roots")) {
    auto roots = rationals_from_json(j.at("roots"));
    const std::size_t k = j.value("k", roots.size());
    prof = profile_from_roots(roots, k);
  } else if (j.contains("e")) {
    prof = SymmetricProfile(j.at("n").get<std::size_t>(), rationals_from_json(j.at("e")));
    if (j.contains("k")) prof = prof.truncated(j.at("k").get<std::size_t>());
  } else if (j.contains("coeffs")) {
    ExactPolynomial p = polynomial_from_json(j);
    prof = profile_from_polynomial(p, j.value("k", static_cast<std::size_t>(std::max(p.degree(), 0))));
  } else {
    throw std::invalid_argument("profile needs \"e\", \"roots\" or \"coeffs\"");
  }
  return prof;
}

Json profile_json(const SymmetricProfile& prof) { return Json{{"n", prof.n}, {"k", prof.k()}, {"e", rationals_json(prof.e)}}; }

Json approx_json(const ApproxResult& r) {
  return Json{{"estimate", rational_json(r.estimate)},
              {"estimate_upper", rational_json(r.estimate_upper)},
              {"factor", rational_json(r.factor)},
              {"branch", to_string(r.branch)},
              {"iterations", r.iterations}};
}

Graph graph_from_json(const Json& j) {
  if (j.contains("catalog")) return high_girth_catalog(j.at("catalog").get<std::string>()).graph;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v], got " + e.dump());
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return Graph(j.at("n").get<std::size_t>(), edges);
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json pair_json(const LowerBoundPair& pair) {
  return Json{{"provenance", to_string(pair.provenance)},
              {"k", pair.k},
              {"ratio_lower", rational_json(pair.ratio_lower)},
              {"p", polynomial_json(pair.p)},
              {"q", polynomial_json(pair.q)}};
}

LowerBoundPair pair_from_json(const Json& j) {
  LowerBoundPair pair;
  pair.p = polynomial_from_json(j.at("p"));
  pair.q = polynomial_from_json(j.at("q"));
  pair.k = j.at("k").get<std::size_t>();
  pair.ratio_lower = rational_from_json(j.at("ratio_lower"));
  pair.provenance = parse_provenance(j.at("provenance").get<std::string>());
  return pair;
}

Json noise_certificate_json(const NoiseCertificate& c) {
  Json rr = Json::array(), rs = Json::array();
  for (const auto& r : c.roots_r) rr.push_back(interval_json(r));
  for (const auto& r : c.roots_s) rs.push_back(interval_json(r));
  return Json{{"identity_holds", c.identity_holds},
              {"differing_degree", c.differing_degree},
              {"differing_count", c.differing_count},
              {"coefficient_ratio", rational_json(c.coefficient_ratio)},
              {"coefficient_bound", rational_json(c.coefficient_bound)},
              {"coefficient_within_bound", c.coefficient_within_bound},
              {"root_ratio_lower", rational_json(c.root_ratio_lower)},
              {"root_ratio_target", rational_json(c.root_ratio_target)},
              {"meets_target", c.meets_target},
              {"common_interlacing", c.common_interlacing},
              {"roots_r", rr},
              {"roots_s", rs}};
}

Json pair_report_json(const PairReport& r) {
  Json out{{"ok", r.ok},
           {"failures", r.failures},
           {"degree", r.degree},
           {"matched", r.matched},
           {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
           {"p_real_rooted", r.p_real_rooted},
           {"q_real_rooted", r.q_real_rooted}};
  if (r.p_real_rooted && r.q_real_rooted) {
    out["p_max"] = interval_json(r.p_max);
    out["q_max"] = interval_json(r.q_max);
    out["certified_ratio"] = rational_json(r.certified_ratio);
  }
  if (r.common_interlacing) out["common_interlacing"] = *r.common_interlacing;
  return out;
}

namespace {

Json vector_json(const VectorQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

VectorQ vector_from_json(const Json& j) {
  auto xs = rationals_from_json(j);
  VectorQ v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

}  // namespace

Json ks_json(const KSInstance& inst) {
  Json supports = Json::array();
  for (const auto& s : inst.supports) {
    Json choices = Json::array();
    for (const auto& c : s) choices.push_back({{"vector", vector_json(c.vector)}, {"prob", to_string(c.probability)}});
    supports.push_back(choices);
  }
  return Json{{"n", inst.n}, {"supports", supports}};
}

KSInstance ks_from_json(const Json& j) {
  KSInstance inst;
  inst.n = j.at("n").get<std::size_t>();
  for (const auto& s : j.at("supports")) {
    std::vector<KSChoice> choices;
    for (const auto& c : s) choices.push_back({vector_from_json(c.at("vector")), rational_from_json(c.at("prob"))});
    inst.supports.push_back(std::move(choices));
  }
  inst.validate();
  return inst;
}

Json sr_json(const SRInstance& inst) {
  Json table = Json::object(), vectors = Json::array();
  for (std::size_t mask = 0; mask < inst.table.size(); ++mask)
    if (inst.table[mask] != 0) table[std::to_string(mask)] = to_string(inst.table[mask]);
  for (const auto& v : inst.vectors) vectors.push_back(vector_json(v));
  return Json{{"n", inst.n}, {"m", inst.m}, {"table", table}, {"vectors", vectors}};
}

SRInstance sr_from_json(const Json& j) {
  SRInstance inst;
  inst.n = j.at("n").get<std::size_t>();
  inst.m = j.at("m").get<std::size_t>();
  if (inst.m == 0 || inst.m > 20) throw std::invalid_argument("SR instance: m must be in [1, 20]");
  inst.table.assign(std::size_t{1} << inst.m, Rational(0));
  for (const auto& [key, value] : j.at("table").items()) {
    std::size_t pos = 0;
    const unsigned long long mask = std::stoull(key, &pos);
    if (pos != key.size() || mask >= inst.table.size()) throw std::invalid_argument("SR instance: bad subset key '" + key + "'");
    inst.table[mask] = rational_from_json(value);
  }
  for (const auto& v : j.at("vectors")) inst.vectors.push_back(vector_from_json(v));
  inst.validate();
  return inst;
}

Json rounding_json(const RoundingResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"coordinates", {s.first, s.first + s.count - 1}},
                     {"chosen", s.chosen},
                     {"candidates", s.candidates},
                     {"k", s.k_used},
                     {"estimator", s.exact_estimates ? "exact" : to_string(s.branch)},
                     {"estimate", rational_json(s.estimate)}});
  return Json{{"assignment", r.assignment},
              {"group_size", r.group_size},
              {"k_requested", r.k_requested},
              {"a_priori_factor", rational_json(r.a_priori_factor)},
              {"root_max", interval_json(r.root_max)},
              {"leaf_max", interval_json(r.leaf_max)},
              {"certified_bound", rational_json(r.certified_ratio_upper)},
              {"within_bound", r.within_bound},
              {"per_step_log", steps}};
}

Json invariance_json(const InvarianceReport& r) {
  Json out{{"invariant", r.invariant}, {"exhaustive", r.exhaustive}, {"signings_checked", r.signings_checked}};
  if (r.witness)
    out["witness"] = {{"first", r.witness->first},
                      {"second", r.witness->second},
                      {"power", r.witness->power},
                      {"trace_first", to_string(r.witness->trace_first)},
                      {"trace_second", to_string(r.witness->trace_second)}};
  return out;
}

Json signing_search_json(const SigningSearchResult& r) {
  return Json{{"signing", r.signing},
              {"char_poly", polynomial_json(r.char_poly)},
              {"lambda_max", interval_json(r.lambda_max)},
              {"classes", r.classes},
              {"distinct_polys", r.distinct_polys}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rootline
