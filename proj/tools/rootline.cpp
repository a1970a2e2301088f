// Command-line front end. Every subcommand writes one JSON document to
// stdout (or --out). Exit status: 0 success, 1 a certificate or check
// failed, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rootline/acceptance.hpp"
#include "rootline/io.hpp"

using namespace rootline;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

struct Output {
  std::string path;
  void write(const Json& j) const {
    const std::string text = dump(j);
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
  }
};

struct GraphSource {
  std::string file, catalog;
  void add(CLI::App* cmd) {
    cmd->add_option("--graph", file, "graph JSON {\"n\", \"edges\"}");
    cmd->add_option("--catalog", catalog, "catalog name (C_8, cube, heawood, K_3,3, ...)");
  }
  Graph load() const {
    if (file.empty() == catalog.empty()) throw UsageError("give exactly one of --graph or --catalog");
    return file.empty() ? high_girth_catalog(catalog).graph : graph_from_json(read_json_file(file));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Top-k coefficient root estimation, lower-bound pairs and interlacing-family rounding"};
  app.require_subcommand(1);
  Output output;

  // approx-root
  auto* approx = app.add_subcommand("approx-root", "estimate the largest root from e_1..e_k");
  std::string profile_file, roots_text, e_text;
  std::size_t k_opt = 0, n_opt = 0;
  approx->add_option("--profile", profile_file, "profile JSON {\"n\", \"e\"} or {\"roots\", \"k\"}");
  approx->add_option("--roots", roots_text, "comma-separated roots, e.g. 1,2,3,4");
  approx->add_option("--e", e_text, "comma-separated e_1..e_k");
  approx->add_option("--n", n_opt, "number of roots (with --e)");
  approx->add_option("--k", k_opt, "statistics to keep");
  std::string method = "auto";
  approx->add_option("--method", method, "auto (branch chosen by k and n) or power-sum (the power-sum estimate at any k)")
      ->check(CLI::IsMember({"auto", "power-sum"}));

  // gen-pair
  auto* gen = app.add_subcommand("gen-pair", "generate a coefficient-matched pair");
  std::string kind;
  std::size_t pair_n = 0, pair_k = 0, base_n = 3;
  unsigned power = 2;
  GraphSource gen_graph;
  gen->add_option("--kind", kind, "weak | girth | boosted | noisy")->required()->check(CLI::IsMember({"weak", "girth", "boosted", "noisy"}));
  gen->add_option("--n", pair_n, "degree (weak, noisy)");
  gen->add_option("--k", pair_k, "noisy-pair order");
  gen->add_option("--t", power, "power (girth) or Chebyshev degree (boosted)");
  gen->add_option("--base-n", base_n, "boosted: degree of the weak base pair");
  gen_graph.add(gen);

  // verify-pair
  auto* verify = app.add_subcommand("verify-pair", "re-check a pair JSON from scratch");
  std::string pair_file;
  verify->add_option("--in", pair_file, "pair JSON")->required();

  // girth
  auto* girth_cmd = app.add_subcommand("girth", "girth and bipartiteness of a graph");
  GraphSource girth_graph;
  girth_graph.add(girth_cmd);

  // sign-search
  auto* sign = app.add_subcommand("sign-search", "signing with the smallest largest eigenvalue");
  GraphSource sign_graph;
  sign_graph.add(sign);

  // verify-invariance
  auto* inv = app.add_subcommand("verify-invariance", "trace powers of D + A_s across signings");
  GraphSource inv_graph;
  std::size_t inv_k = 0;
  std::string diag_text;
  std::uint64_t samples = 0, seed = kDefaultSeed;
  inv_graph.add(inv);
  inv->add_option("--k", inv_k, "highest trace power")->required();
  inv->add_option("--diag", diag_text, "comma-separated diagonal (default 0)");
  inv->add_option("--samples", samples, "random signings instead of all of them");
  inv->add_option("--seed", seed, "seed for --samples");

  // round
  auto* round = app.add_subcommand("round", "round a KS or SR interlacing family");
  std::string family_file, epsilon_text;
  bool exhaustive = false;
  round->add_option("--family", family_file, "KS JSON {\"n\", \"supports\"} or SR JSON {\"n\", \"m\", \"table\", \"vectors\"}")->required();
  round->add_option("--epsilon", epsilon_text, "p/q")->required();
  round->add_flag("--exhaustive-check", exhaustive, "compare with the best leaf over all assignments");

  // selftest
  auto* self = app.add_subcommand("selftest", "run acceptance criteria");
  int criterion = 0;
  bool with_detail = false, timing = false;
  std::uint64_t self_seed = kDefaultSeed;
  self->add_option("--criterion", criterion, "run only this criterion (1-11)")->check(CLI::Range(1, kCriterionCount));
  self->add_option("--seed", self_seed, "corpus seed");
  self->add_flag("--json", with_detail, "emit the full JSON report (lines still go to stdout with --out)");
  self->add_flag("--timing", timing, "append wall-clock seconds (breaks byte-determinism)");

  for (auto* cmd : app.get_subcommands({})) cmd->add_option("--out", output.path, "write the JSON result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*approx) {
      SymmetricProfile prof;
      if (!profile_file.empty()) prof = profile_from_json(read_json_file(profile_file));
      else if (!roots_text.empty()) {
        auto roots = parse_list(roots_text);
        prof = profile_from_roots(roots, k_opt ? k_opt : roots.size());
      } else if (!e_text.empty()) {
        if (n_opt == 0) throw UsageError("--e needs --n");
        prof = SymmetricProfile(n_opt, parse_list(e_text));
        if (k_opt) prof = prof.truncated(k_opt);
      } else {
        throw UsageError("give --profile, --roots or --e");
      }
      ApproxResult r = method == "auto" ? approx_max_root(prof) : power_sum_estimate(prof);
      output.write(Json{{"profile", profile_json(prof)}, {"method", method}, {"result", approx_json(r)}});
      return 0;
    }
    if (*gen) {
      LowerBoundPair pair;
      Json extra;
      if (kind == "weak") {
        if (pair_n == 0) throw UsageError("weak needs --n");
        pair = weak_pair(pair_n);
      } else if (kind == "girth") {
        GirthPairInfo info;
        pair = girth_pair(gen_graph.load(), power, &info);
        extra = {{"girth", info.girth}, {"best_signing", info.best}, {"lambda_plus", interval_json(info.lambda_plus)},
                 {"lambda_best", interval_json(info.lambda_best)}, {"degree_bound", rational_json(info.degree_bound)}};
      } else if (kind == "boosted") {
        BoostInfo info;
        pair = boosted_pair(weak_pair(base_n), power, &info);
        extra = {{"scale", to_string(info.scale)}, {"shift", to_string(info.shift)},
                 {"formula_ratio", rational_json(info.formula_ratio)}, {"meets_formula", info.meets_formula}};
      } else {
        if (pair_k == 0 || pair_n == 0) throw UsageError("noisy needs --k and --n");
        NoisyPair noisy = noisy_pair(pair_k, pair_n);
        pair = noisy.pair;
        extra = {{"noise", noise_certificate_json(noisy.certificate)}};
      }
      PairReport rep = verify_pair(pair);
      Json out = pair_json(pair);
      Json cert = pair_report_json(rep);
      for (auto& [key, value] : extra.items()) cert[key] = value;
      out["certificate"] = cert;
      output.write(out);
      return rep.ok ? 0 : 1;
    }
    if (*verify) {
      LowerBoundPair pair = pair_from_json(read_json_file(pair_file));
      PairReport rep = verify_pair(pair);
      output.write(pair_report_json(rep));
      return rep.ok ? 0 : 1;
    }
    if (*girth_cmd) {
      Graph g = girth_graph.load();
      auto gth = girth(g);
      output.write(Json{{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"girth", gth ? Json(*gth) : Json("infinity")},
                        {"bipartite", is_bipartite(g)}, {"max_degree", g.max_degree()}, {"avg_degree", rational_json(avg_degree_bound(g))}});
      return 0;
    }
    if (*sign) {
      Graph g = sign_graph.load();
      SigningSearchResult r = best_signing_search(g);
      Json out = signing_search_json(r);
      if (g.max_degree() >= 2) out["within_ramanujan_bound"] = within_ramanujan_bound(r.char_poly, g.max_degree());
      output.write(out);
      return 0;
    }
    if (*inv) {
      Graph g = inv_graph.load();
      std::vector<Rational> diag = parse_list(diag_text);
      if (!diag.empty() && diag.size() != g.vertex_count()) throw UsageError("--diag needs one entry per vertex");
      InvarianceReport r = samples ? sample_sign_invariance(g, diag, inv_k, samples, seed) : check_sign_invariance(g, diag, inv_k);
      output.write(invariance_json(r));
      return r.invariant ? 0 : 1;
    }
    if (*round) {
      Json family = read_json_file(family_file);
      std::unique_ptr<FamilyOracle> oracle;
      if (family.contains("supports")) oracle = ks_oracle(ks_from_json(family));
      else if (family.contains("table")) oracle = sr_oracle(sr_from_json(family));
      else throw UsageError("family JSON needs \"supports\" (KS) or \"table\" (SR)");
      RoundingResult r = round_family(*oracle, parse_rational(epsilon_text));
      Json out = rounding_json(r);
      bool ok = r.within_bound;
      if (exhaustive) {
        ExhaustiveResult ex = exhaustive_leaf_minimum(*oracle);
        const bool below_root = ex.best_max.lo <= r.root_max.hi;
        out["exhaustive"] = {{"leaves", ex.leaves}, {"best", ex.best}, {"best_max", interval_json(ex.best_max)}, {"best_below_root", below_root}};
        ok = ok && below_root;
      }
      output.write(out);
      return ok ? 0 : 1;
    }
    if (*self) {
      std::vector<int> ids;
      if (criterion) ids.push_back(criterion);
      else
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
      bool all = true;
      Json report = Json::array();
      for (int id : ids) {
        CriterionResult r = run_criterion(id, self_seed);
        all = all && r.pass;
        if (!with_detail || !output.path.empty()) std::cout << format_line(r) << (timing ? " [" + std::to_string(r.seconds) + "s]" : "") << "\n" << std::flush;
        if (with_detail) {
          Json entry{{"criterion", id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}, {"detail", r.detail}};
          if (timing) entry["seconds"] = r.seconds;
          report.push_back(entry);
        }
      }
      if (with_detail) output.write(report);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << dump(Json{{"error", e.what()}, {"kind", "usage"}});
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << dump(Json{{"error", e.what()}, {"kind", "input"}});
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << dump(Json{{"error", e.what()}, {"kind", "json"}});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump(Json{{"error", e.what()}, {"kind", "failure"}});
    return 1;
  }
  return 2;
}
