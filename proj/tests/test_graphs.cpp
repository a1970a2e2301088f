#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootline/graphs.hpp"

using namespace rootline;

namespace {

Rational q(long a, long b) { return Rational(a) / Rational(b); }

ExactPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

Graph single_edge() { return Graph(2, {{0, 1}}); }

Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

std::vector<Rational> random_diagonal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(Rational(num(rng)) / Rational(den(rng)));
  return d;
}

// Minimum lambda_max over all signings by brute force, plus the lexicographically
// first minimizer (+1 < -1 in edge order).
std::pair<Signing, IsolatedRoot> brute_best(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::optional<IsolatedRoot> best;
  Signing best_s;
  // enumerate in lexicographic order: edge 0 is the most significant position
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    Signing s(m, 1);
    for (std::size_t e = 0; e < m; ++e)
      if (code >> (m - 1 - e) & 1u) s[e] = -1;
    IsolatedRoot r = *largest_root(char_poly(signed_adjacency(g, s)));
    if (!best || compare(r, *best) == std::strong_ordering::less) {
      best = r;
      best_s = s;
    }
  }
  return {best_s, *best};
}

}  // namespace

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  Graph g(3, {{2, 1}});
  CHECK(g.edges()[0] == Edge{1, 2});
}

TEST_CASE("girth") {
  CHECK(girth(high_girth_catalog("C_5").graph) == 5u);
  CHECK_FALSE(girth(path(6)).has_value());
  CHECK_FALSE(girth(Graph(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}})).has_value());
  CHECK(girth(high_girth_catalog("K_4").graph) == 3u);
  CHECK(girth(high_girth_catalog("K_3,3").graph) == 4u);
  CHECK(girth(high_girth_catalog("cube").graph) == 4u);
}

TEST_CASE("catalog") {
  auto h = high_girth_catalog("heawood");
  CHECK(h.graph.vertex_count() == 14);
  CHECK(h.graph.edge_count() == 21);
  CHECK(h.girth == 6u);
  CHECK(h.max_degree == 3);
  CHECK(h.avg_degree == 3);
  auto c8 = high_girth_catalog("C_8");
  CHECK(c8.girth == 8u);
  auto tc = high_girth_catalog("tutte-coxeter");
  CHECK(tc.graph.vertex_count() == 30);
  CHECK(tc.graph.edge_count() == 45);
  CHECK(tc.girth == 8u);
  CHECK(tc.max_degree == 3);
  CHECK(is_bipartite(tc.graph));
  CHECK(is_bipartite(h.graph));
  CHECK_FALSE(is_bipartite(high_girth_catalog("C_5").graph));
  CHECK(high_girth_catalog("Q_3").graph.edge_count() == 12);
  CHECK_THROWS_AS(high_girth_catalog("petersen"), std::invalid_argument);
  for (const auto& name : catalog_names()) CHECK_NOTHROW(high_girth_catalog(name));
}

TEST_CASE("average degree") {
  CHECK(avg_degree_bound(high_girth_catalog("C_7").graph) == 2);
  CHECK(avg_degree_bound(high_girth_catalog("K_4").graph) == 3);
  CHECK(avg_degree_bound(high_girth_catalog("heawood").graph) == 3);
  for (const auto& name : catalog_names()) {
    auto entry = high_girth_catalog(name);
    auto lambda = largest_root(char_poly(signed_adjacency(entry.graph, all_positive(entry.graph))));
    REQUIRE(lambda);
    CHECK(compare(*lambda, avg_degree_bound(entry.graph)) != std::strong_ordering::less);
  }
}

TEST_CASE("signed adjacency") {
  auto plus = signed_adjacency(single_edge(), {1});
  CHECK(plus.entries()(0, 1) == 1);
  CHECK(plus.entries()(1, 0) == 1);
  CHECK(plus.entries()(0, 0) == 0);
  auto minus = signed_adjacency(single_edge(), {-1});
  CHECK(minus.entries()(0, 1) == -1);
  CHECK(minus.symmetric());
  auto c4 = high_girth_catalog("C_4").graph;
  CHECK(char_poly(signed_adjacency(c4, all_positive(c4))) == P({0, 0, -4, 0, 1}));
  CHECK_THROWS_AS(signed_adjacency(c4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(signed_adjacency(c4, {1, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(signed_adjacency(c4, all_positive(c4), {Rational(1)}), std::invalid_argument);
  auto with_d = signed_adjacency(single_edge(), {1}, {q(1, 2), Rational(3)});
  CHECK(with_d.entries()(0, 0) == q(1, 2));
  auto spectrum = float_spectrum(signed_adjacency(c4, all_positive(c4)));
  CHECK(spectrum.front() == doctest::Approx(-2));
  CHECK(spectrum.back() == doctest::Approx(2));
}

TEST_CASE("trace powers match dense matrix powers") {
  std::mt19937_64 rng(4);
  auto g = high_girth_catalog("cube").graph;
  for (int trial = 0; trial < 5; ++trial) {
    auto d = random_diagonal(rng, g.vertex_count());
    auto s = signing_from_mask(g, rng() & 0xfff);
    auto a = signed_adjacency(g, s, d).entries();
    MatrixQ power = a;
    auto traces = trace_powers(g, s, d, 7);
    for (std::size_t i = 1; i <= 7; ++i) {
      CHECK(traces[i - 1] == power.trace());
      power = power * a;
    }
  }
}

TEST_CASE("sign invariance examples") {
  auto c4 = high_girth_catalog("C_4").graph;
  CHECK(verify_sign_invariance(c4, {}, 3));
  auto report = check_sign_invariance(c4, {}, 4);
  CHECK_FALSE(report.invariant);
  REQUIRE(report.witness);
  CHECK(report.witness->power == 4);
  CHECK(report.witness->trace_first != report.witness->trace_second);
  CHECK(verify_sign_invariance(single_edge(), {q(5, 3), Rational(-2)}, 1));
  auto big = high_girth_catalog("tutte-coxeter").graph;
  CHECK_THROWS_AS(verify_sign_invariance(big, {}, 3), std::length_error);
  auto sampled = sample_sign_invariance(big, {}, 7, 200, 1);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.invariant);
}

TEST_CASE("sign invariance below the girth, exhaustively") {
  std::mt19937_64 rng(17);
  for (const char* name : {"C_4", "C_6", "C_8", "cube", "K_3,3"}) {
    auto entry = high_girth_catalog(name);
    const std::size_t gth = *entry.girth;
    for (int trial = 0; trial < 3; ++trial) {
      auto d = trial == 0 ? std::vector<Rational>{} : random_diagonal(rng, entry.graph.vertex_count());
      CHECK(verify_sign_invariance(entry.graph, d, gth - 1));
    }
    CHECK_FALSE(verify_sign_invariance(entry.graph, {}, gth));
  }
}

TEST_CASE("bipartite spectra are symmetric") {
  std::mt19937_64 rng(23);
  for (const char* name : {"C_4", "C_6", "C_8", "cube", "K_3,3", "K_2,2"}) {
    auto g = high_girth_catalog(name).graph;
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask += (m > 10 ? 7 : 1)) {
      auto p = char_poly(signed_adjacency(g, signing_from_mask(g, mask)));
      const int parity = static_cast<int>(g.vertex_count() % 2);
      for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) CHECK(static_cast<int>(i % 2) == parity);
    }
    (void)rng;
  }
}

TEST_CASE("best signing search") {
  auto one = best_signing_search(single_edge());
  CHECK(one.lambda_max.exact());
  CHECK(one.lambda_max.lo == 1);
  CHECK(one.signing == Signing{1});

  auto c4 = best_signing_search(high_girth_catalog("C_4").graph);
  CHECK(c4.char_poly == power(P({-2, 0, 1}), 2));
  CHECK(c4.signing == Signing{1, 1, 1, -1});
  CHECK(within_ramanujan_bound(c4.char_poly, 2));

  auto cube = best_signing_search(high_girth_catalog("cube").graph);
  CHECK(within_ramanujan_bound(cube.char_poly, 3));
  CHECK(cube.classes == 32);

  SUBCASE("agrees with brute force over all signings") {
    for (const char* name : {"C_4", "C_6", "K_3,3", "cube", "K_2,2", "C_5"}) {
      auto g = high_girth_catalog(name).graph;
      auto fast = best_signing_search(g);
      auto [s, root] = brute_best(g);
      CHECK(fast.signing == s);
      CHECK(compare(*largest_root(fast.char_poly), root) == std::strong_ordering::equal);
    }
  }
  CHECK_THROWS_AS(best_signing_search(high_girth_catalog("tutte-coxeter").graph), std::length_error);
}
