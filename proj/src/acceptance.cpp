#include "rootline/acceptance.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rootline/chebyshev.hpp"

namespace rootline {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Rational> random_root_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < n; ++i) {
    const long b = 1 + static_cast<long>(draw(rng, 16));
    const long a = static_cast<long>(draw(rng, static_cast<std::uint64_t>(10 * b + 1)));
    mu.push_back(Rational(a) / Rational(b));
  }
  return mu;
}

KSInstance random_ks_instance(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t max_support) {
  KSInstance inst;
  inst.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t size = 1 + draw(rng, max_support);
    std::vector<long> w;
    long total = 0;
    for (std::size_t j = 0; j < size; ++j) {
      w.push_back(1 + static_cast<long>(draw(rng, 12 / static_cast<std::uint64_t>(size))));
      total += w.back();
    }
    std::vector<KSChoice> support;
    for (std::size_t j = 0; j < size; ++j) {
      VectorQ v(static_cast<Eigen::Index>(n));
      for (std::size_t r = 0; r < n; ++r) v(static_cast<Eigen::Index>(r)) = Rational(static_cast<long>(draw(rng, 5)) - 2);
      support.push_back({v, Rational(w[j]) / Rational(total)});
    }
    inst.supports.push_back(std::move(support));
  }
  return inst;
}

std::vector<LowerBoundPair> generated_pairs() {
  std::vector<LowerBoundPair> pairs;
  for (std::size_t n = 2; n <= 64; ++n) pairs.push_back(weak_pair(n));
  for (const auto& name : catalog_names()) {
    CatalogEntry entry = high_girth_catalog(name);
    if (!is_bipartite(entry.graph) || entry.graph.edge_count() > kExhaustionCap) continue;
    for (unsigned t : {2u, 4u})
      if (entry.girth && t < *entry.girth) pairs.push_back(girth_pair(entry.graph, t));
  }
  for (std::size_t n : {2u, 3u})
    for (unsigned t = 1; t <= 4; ++t) pairs.push_back(boosted_pair(weak_pair(n), t));
  for (std::size_t k = 2; k <= 16; ++k) pairs.push_back(noisy_pair(k, 2 * k).pair);
  return pairs;
}

namespace {

std::string rat(const Rational& x) { return to_string(x) + " (~" + to_decimal(x, 6) + ")"; }

std::size_t ceil_log(std::size_t n) {
  auto [lo, hi] = log_bounds(static_cast<std::uint64_t>(n));
  const Integer a = ceil(lo), b = ceil(hi);
  if (a != b) throw std::logic_error("ceil(ln n) is not decided at this precision");
  return static_cast<std::size_t>(a);
}

// ---- criteria 1-3: one corpus of estimator runs ----

struct CorpusRun {
  std::size_t vector_index = 0, n = 0, k = 0;
  ApproxResult result;
  Rational mu_max, alpha, pk;
  bool pk_matches_roots = false;
  std::size_t bound = 0;
};

const std::vector<CorpusRun>& corpus(std::uint64_t seed) {
  static std::map<std::uint64_t, std::vector<CorpusRun>> cache;
  auto it = cache.find(seed);
  if (it != cache.end()) return it->second;
  std::vector<CorpusRun> runs;
  std::mt19937_64 rng(seed);
  std::size_t index = 0;
  for (std::size_t n : {4u, 16u, 64u, 256u}) {
    const std::size_t l = ceil_log(n);
    std::vector<std::size_t> ks{1, 2, l, 2 * l, n};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int v = 0; v < 125; ++v, ++index) {
      const std::vector<Rational> mu = random_root_vector(rng, n);
      const SymmetricProfile full = profile_from_roots(mu, n);
      const Rational mu_max = *std::max_element(mu.begin(), mu.end());
      for (std::size_t k : ks) {
        CorpusRun run;
        run.vector_index = index;
        run.n = n;
        run.k = k;
        const SymmetricProfile prof = full.truncated(k);
        run.result = approx_max_root(prof);
        run.mu_max = mu_max;
        run.alpha = alpha_factor(k, n);
        run.pk = newton_power_sums(prof.e, k).back();
        Rational direct(0);
        for (const auto& x : mu) direct += pow(x, static_cast<unsigned>(k));
        run.pk_matches_roots = direct == run.pk;
        run.bound = iteration_bound(k, n);
        runs.push_back(std::move(run));
      }
    }
  }
  return cache.emplace(seed, std::move(runs)).first->second;
}

void criterion_bracket(CriterionResult& r, std::uint64_t seed) {
  const auto& runs = corpus(seed);
  std::size_t failures = 0, single_rho = 0, loop_runs = 0;
  Json examples = Json::array();
  std::map<std::string, std::size_t> per_nk;
  for (const auto& run : runs) {
    const bool ok = run.result.estimate <= run.mu_max && run.mu_max <= run.alpha * run.result.estimate_upper;
    ++per_nk["n=" + std::to_string(run.n) + ",k=" + std::to_string(run.k)];
    if (run.result.branch == Branch::chebyshev_loop) {
      ++loop_runs;
      if (run.mu_max > loop_shrink(run.k, run.n) * run.result.estimate_upper) ++single_rho;
    }
    if (!ok) {
      ++failures;
      if (examples.size() < 5)
        examples.push_back({{"vector", run.vector_index}, {"n", run.n}, {"k", run.k}, {"estimate", to_string(run.result.estimate)},
                            {"mu_max", to_string(run.mu_max)}, {"alpha", to_string(run.alpha)}});
    }
  }
  r.pass = failures == 0 && !runs.empty();
  r.summary = std::to_string(runs.size()) + " runs over 500 vectors, " + std::to_string(failures) +
              " bracket failures; " + std::to_string(single_rho) + " of " + std::to_string(loop_runs) +
              " loop runs exceed a single shrink factor";
  r.detail = {{"runs", runs.size()}, {"failures", failures}, {"loop_runs", loop_runs},
              {"single_factor_violations", single_rho}, {"runs_per_setting", per_nk}, {"failing_examples", examples}};
}

void criterion_chain(CriterionResult& r, std::uint64_t seed) {
  const auto& runs = corpus(seed);
  std::size_t failures = 0, mismatched = 0;
  for (const auto& run : runs) {
    const Rational top = pow(run.mu_max, static_cast<unsigned>(run.k));
    if (!(run.pk / Rational(static_cast<unsigned long>(run.n)) <= top && top <= run.pk)) ++failures;
    if (!run.pk_matches_roots) ++mismatched;
  }
  r.pass = failures == 0 && mismatched == 0;
  r.summary = std::to_string(runs.size()) + " runs, " + std::to_string(failures) + " chain failures, " +
              std::to_string(mismatched) + " power sums differing from the roots";
  r.detail = {{"runs", runs.size()}, {"failures", failures}, {"power_sum_mismatches", mismatched}};
}

void criterion_iterations(CriterionResult& r, std::uint64_t seed) {
  const auto& runs = corpus(seed);
  std::size_t loop_runs = 0, failures = 0, worst_slack = SIZE_MAX;
  for (const auto& run : runs) {
    if (run.result.branch != Branch::chebyshev_loop) continue;
    ++loop_runs;
    if (run.result.iterations > run.bound) ++failures;
    else worst_slack = std::min(worst_slack, run.bound - run.result.iterations);
  }
  r.pass = loop_runs > 0 && failures == 0;
  r.summary = std::to_string(loop_runs) + " loop runs, " + std::to_string(failures) + " over the closed-form bound";
  r.detail = {{"loop_runs", loop_runs}, {"failures", failures}};
  if (worst_slack != SIZE_MAX) r.detail["smallest_slack"] = worst_slack;
}

// ---- criterion 4 ----

void criterion_weak(CriterionResult& r) {
  std::size_t failures = 0;
  Json bad = Json::array();
  for (std::size_t n = 2; n <= 64; ++n) {
    LowerBoundPair pair = weak_pair(n);
    // 2^{n-1} times a monic weak-pair polynomial has integer coefficients
    const Rational scale = pow(Rational(2), static_cast<unsigned>(n - 1));
    bool integral = true, equal = true;
    for (std::size_t i = 1; i < n; ++i) {
      const Rational a = pair.p.top(i) * scale, b = pair.q.top(i) * scale;
      integral = integral && denom(a) == 1 && denom(b) == 1;
      equal = equal && numer(a) == numer(b);
    }
    const Rational target = 1 + 1 / Rational(static_cast<unsigned long>(n * n));
    const PairReport rep = verify_pair(pair);
    const bool ok = integral && equal && pair.k == n - 1 && rep.ok && pair.ratio_lower >= target;
    if (!ok) {
      ++failures;
      bad.push_back({{"n", n}, {"integral", integral}, {"equal", equal}, {"verified", rep.ok}, {"ratio_lower", to_string(pair.ratio_lower)}});
    }
  }
  const LowerBoundPair three = weak_pair(3);
  const std::vector<Rational> expect{Rational(3), Rational(9) / Rational(4)};
  const bool profiles = profile_from_polynomial(three.p, 2).e == expect && profile_from_polynomial(three.q, 2).e == expect;
  // lambda_max(q) / lambda_max(p) = 2 / (3/2) exactly
  const auto pmax = largest_root(three.p), qmax = largest_root(three.q);
  const bool exact_ratio = compare(*pmax, Rational(3) / Rational(2)) == std::strong_ordering::equal &&
                           compare(*qmax, Rational(2)) == std::strong_ordering::equal;
  r.pass = failures == 0 && profiles && exact_ratio;
  r.summary = "n = 2..64: " + std::to_string(failures) + " failures; n = 3 profiles (3, 9/4) " + (profiles ? "match" : "DIFFER") +
              ", ratio exactly 4/3 " + (exact_ratio ? "confirmed" : "NOT confirmed");
  r.detail = {{"failures", bad}, {"n3_profiles", profiles}, {"n3_ratio_exact", exact_ratio}, {"n3_ratio_lower", rational_json(three.ratio_lower)}};
}

// ---- criterion 5 ----

void criterion_invariance(CriterionResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eed5);
  bool all = true;
  Json graphs = Json::array();
  std::string worst;
  for (const std::string name : {"C_4", "C_6", "C_8", "cube", "heawood"}) {
    const CatalogEntry entry = high_girth_catalog(name);
    const Graph& g = entry.graph;
    const std::size_t gth = *entry.girth;
    std::vector<std::vector<Rational>> diagonals{std::vector<Rational>(g.vertex_count(), Rational(0))};
    for (int d = 0; d < 3; ++d) {
      std::vector<Rational> diag;
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        diag.push_back(Rational(static_cast<long>(draw(rng, 7)) - 3) / Rational(1 + static_cast<long>(draw(rng, 3))));
      diagonals.push_back(diag);
    }
    bool below = true;
    std::optional<std::size_t> witness_for;
    Json witness;
    std::uint64_t checked = 0;
    for (std::size_t d = 0; d < diagonals.size(); ++d) {
      InvarianceReport rep = check_sign_invariance(g, diagonals[d], gth - 1);
      checked += rep.signings_checked;
      below = below && rep.invariant && rep.exhaustive;
      if (!witness_for) {
        InvarianceReport at = check_sign_invariance(g, diagonals[d], gth);
        if (!at.invariant && at.witness) {
          witness_for = d;
          witness = invariance_json(at)["witness"];
        }
      }
    }
    const bool ok = below && witness_for.has_value();
    all = all && ok;
    graphs.push_back({{"graph", name}, {"edges", g.edge_count()}, {"girth", gth}, {"invariant_below_girth", below},
                      {"signings_checked", checked}, {"disagreement_at_girth", witness_for.has_value()},
                      {"witness_diagonal", witness_for ? Json(*witness_for) : Json(nullptr)}, {"witness", witness}});
    if (!ok) worst += " " + name;
  }
  r.pass = all;
  r.summary = all ? "5 graphs x 4 diagonals invariant below the girth; disagreement exhibited at the girth for each graph"
                  : "failed on:" + worst;
  r.detail = {{"graphs", graphs}};
}

// ---- criterion 6 ----

void criterion_girth_pair(CriterionResult& r) {
  GirthPairInfo info;
  const LowerBoundPair pair = girth_pair(high_girth_catalog("heawood").graph, 2, &info);
  const PairReport rep = verify_pair(pair);
  const bool matched = pair.k == 2 && profile_from_polynomial(pair.p, 2) == profile_from_polynomial(pair.q, 2);
  const Rational target = Rational(9) / Rational(8);
  r.pass = rep.ok && matched && pair.ratio_lower >= target;
  r.summary = "Heawood, t = 2: k = " + std::to_string(pair.k) + ", ratio >= " + rat(pair.ratio_lower) + " against 9/8" +
              (rep.ok ? ", verified" : ", verification FAILED");
  r.detail = {{"pair", pair_json(pair)}, {"report", pair_report_json(rep)}, {"lambda_plus", interval_json(info.lambda_plus)},
              {"lambda_best", interval_json(info.lambda_best)}, {"best_signing", info.best}};
}

// ---- criterion 7 ----

void criterion_noisy(CriterionResult& r) {
  bool identities = true, coefficients = true, interlacing = true, ratios = true;
  Json rows = Json::array();
  std::vector<std::size_t> short_of_target;
  for (std::size_t k = 2; k <= 16; ++k) {
    const NoisyPair noisy = noisy_pair(k, 2 * k);
    const NoiseCertificate& c = noisy.certificate;
    identities = identities && c.identity_holds && c.differing_count == 1;
    coefficients = coefficients && c.coefficient_within_bound;
    interlacing = interlacing && c.common_interlacing;
    if (!c.meets_target) {
      ratios = false;
      short_of_target.push_back(k);
    }
    rows.push_back({{"k", k}, {"coefficient_ratio", to_string(c.coefficient_ratio)}, {"coefficient_bound", to_string(c.coefficient_bound)},
                    {"root_ratio_lower", to_decimal(c.root_ratio_lower, 12)}, {"root_ratio_target", to_decimal(c.root_ratio_target, 12)},
                    {"meets_target", c.meets_target}, {"common_interlacing", c.common_interlacing}});
  }
  const bool k2 = noisy_pair(2, 4).certificate.coefficient_ratio == Rational(49) / Rational(47);
  r.pass = identities && coefficients && interlacing && ratios && k2;
  std::ostringstream s;
  s << "identity " << (identities ? "ok" : "FAILED") << ", coefficient ratio " << (coefficients ? "ok" : "FAILED")
    << ", interlacing " << (interlacing ? "ok" : "FAILED") << ", k=2 ratio 49/47 " << (k2 ? "ok" : "FAILED")
    << ", root ratio >= 1 + 1/(2k^2) fails for " << short_of_target.size() << " of 15 k";
  r.summary = s.str();
  r.detail = {{"rows", rows}, {"root_ratio_short_for_k", short_of_target}};
}

// ---- criterion 8 ----

void criterion_ramanujan(CriterionResult& r) {
  bool all = true;
  std::size_t tested = 0;
  Json rows = Json::array();
  const Rational slack = pow2(-20);
  for (const auto& name : catalog_names()) {
    const CatalogEntry entry = high_girth_catalog(name);
    if (!is_bipartite(entry.graph) || entry.graph.edge_count() > kExhaustionCap) continue;
    ++tested;
    const std::size_t d = entry.max_degree;
    const SigningSearchResult best = best_signing_search(entry.graph);
    const Rational bound = sqrt_upper(Rational(static_cast<unsigned long>(4 * (d - 1))));
    const bool ok = best.lambda_max.lo <= bound + slack;
    const bool exact = within_ramanujan_bound(best.char_poly, d);
    all = all && ok;
    rows.push_back({{"graph", name}, {"edges", entry.graph.edge_count()}, {"max_degree", d},
                    {"lambda_max", interval_json(best.lambda_max)}, {"bound_upper", to_decimal(bound, 12)},
                    {"within_slack", ok}, {"within_exact", exact}, {"classes", best.classes}});
  }
  r.pass = all && tested > 0;
  r.summary = std::to_string(tested) + " bipartite catalog graphs with |E| <= 24, " + (all ? "all" : "NOT all") + " within 2 sqrt(d - 1)";
  r.detail = {{"graphs", rows}};
}

// ---- criterion 9 ----

void criterion_ks_oracle(CriterionResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x4b53);
  std::size_t failures = 0, comparisons = 0;
  Json sizes = Json::array();
  for (int i = 0; i < 50; ++i) {
    KSInstance inst;
    std::uint64_t outcomes = 0;
    do {
      const std::size_t m = 1 + draw(rng, 8), n = 1 + draw(rng, 4);
      inst = random_ks_instance(rng, m, n, 3);
      outcomes = 1;
      for (const auto& s : inst.supports) outcomes *= s.size();
    } while (outcomes > 4096);
    auto oracle = ks_oracle(inst);
    const std::size_t m = inst.supports.size();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> prefix;
      const std::size_t len = trial == 0 ? 0 : draw(rng, m + 1);
      for (std::size_t j = 0; j < len; ++j) prefix.push_back(draw(rng, inst.supports[j].size()));
      const ExactPolynomial brute = ks_expected_char_poly(inst, prefix);
      for (std::size_t k = 1; k <= inst.n; ++k) {
        ++comparisons;
        auto top = oracle->top_coefficients(prefix, k);
        bool ok;
        if (!top) ok = brute.is_zero();
        else {
          ok = !brute.is_zero() && brute.degree() == static_cast<int>(inst.n);
          for (std::size_t j = 0; ok && j <= k; ++j) ok = (*top)[j] == brute.top(j);
        }
        if (!ok) ++failures;
      }
    }
    sizes.push_back({{"m", m}, {"n", inst.n}, {"outcomes", outcomes}});
  }
  r.pass = failures == 0;
  r.summary = "50 instances, " + std::to_string(comparisons) + " coefficient comparisons, " + std::to_string(failures) + " mismatches";
  r.detail = {{"comparisons", comparisons}, {"failures", failures}, {"instances", sizes}};
}

// ---- criterion 10 ----

void criterion_rounding(CriterionResult& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x726f756e64);
  std::size_t failures = 0, runs = 0;
  Json rows = Json::array();
  for (int i = 0; i < 20; ++i) {
    const std::size_t m = 4 + draw(rng, 7);
    const KSInstance inst = random_ks_instance(rng, m, 4, 2);
    auto oracle = ks_oracle(inst);
    const ExhaustiveResult ex = exhaustive_leaf_minimum(*oracle);
    for (const Rational& eps : {Rational(1) / Rational(2), Rational(1) / Rational(8)}) {
      ++runs;
      const RoundingResult res = round_family(*oracle, eps);
      // some leaf lies at or below the root polynomial, and the rounded
      // leaf is no better than the best leaf
      const bool below_root = ex.best_max.lo <= res.root_max.hi;
      const bool sane = res.leaf_max.hi >= ex.best_max.lo;
      const bool ok = res.within_bound && below_root && sane;
      if (!ok) ++failures;
      rows.push_back({{"instance", i}, {"m", m}, {"epsilon", to_string(eps)}, {"assignment", res.assignment},
                      {"leaf_max", to_decimal(res.leaf_max.lo, 10)}, {"root_max", to_decimal(res.root_max.lo, 10)},
                      {"best_leaf", to_decimal(ex.best_max.lo, 10)}, {"within_bound", res.within_bound}, {"ok", ok}});
    }
  }
  r.pass = failures == 0;
  r.summary = std::to_string(runs) + " rounding runs (m = 4..10, n = 4), " + std::to_string(failures) + " failures";
  r.detail = {{"runs", rows}};
}

// ---- criterion 11 ----

void criterion_indistinguishable(CriterionResult& r) {
  std::size_t failures = 0, count = 0;
  std::map<std::string, std::size_t> by_kind;
  Json bad = Json::array();
  for (const auto& pair : generated_pairs()) {
    ++count;
    ++by_kind[to_string(pair.provenance)];
    const SymmetricProfile a = profile_from_polynomial(pair.p, pair.k), b = profile_from_polynomial(pair.q, pair.k);
    auto run = [](const SymmetricProfile& prof) -> std::pair<std::optional<ApproxResult>, std::string> {
      try {
        return {approx_max_root(prof), ""};
      } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
      }
    };
    const auto ra = run(a), rb = run(b);
    const bool ok = a == b && ra == rb;
    if (!ok) {
      ++failures;
      bad.push_back({{"provenance", to_string(pair.provenance)}, {"degree", pair.p.degree()}, {"k", pair.k}});
    }
  }
  r.pass = failures == 0 && count > 0;
  r.summary = std::to_string(count) + " generated pairs, " + std::to_string(failures) + " distinguishable";
  r.detail = {{"pairs", count}, {"by_provenance", by_kind}, {"failures", bad}};
}

}  // namespace

std::string criterion_title(int id) {
  switch (id) {
    case 1: return "top-k estimator bracket";
    case 2: return "power-sum chain";
    case 3: return "loop iteration bound";
    case 4: return "weak pair";
    case 5: return "sign invariance below the girth";
    case 6: return "girth pair on Heawood";
    case 7: return "noisy pair";
    case 8: return "Ramanujan signings";
    case 9: return "KS oracle";
    case 10: return "interlacing-family rounding";
    case 11: return "indistinguishability";
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion_bracket(r, seed); break;
      case 2: criterion_chain(r, seed); break;
      case 3: criterion_iterations(r, seed); break;
      case 4: criterion_weak(r); break;
      case 5: criterion_invariance(r, seed); break;
      case 6: criterion_girth_pair(r); break;
      case 7: criterion_noisy(r); break;
      case 8: criterion_ramanujan(r); break;
      case 9: criterion_ks_oracle(r, seed); break;
      case 10: criterion_rounding(r, seed); break;
      case 11: criterion_indistinguishable(r); break;
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (" << r.title << "): " << r.summary;
  return s.str();
}

}  // namespace rootline
