// Simple graphs, edge signings and the spectra of signed adjacency matrices.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootline/matrix.hpp"
#include "rootline/roots.hpp"

namespace rootline {

struct Edge {
  std::size_t u = 0, v = 0;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1. Edges keep their insertion
/// order, which is the order signings refer to.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbours with the index of the connecting edge.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t max_degree() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

/// One sign (+1 or -1) per edge, in edge order.
using Signing = std::vector<int>;

Signing all_positive(const Graph& g);
/// Bit i of mask set means edge i gets -1.
Signing signing_from_mask(const Graph& g, std::uint64_t mask);

/// Shortest cycle length by breadth-first search from every vertex;
/// nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

bool is_bipartite(const Graph& g);

/// D + A_s. An empty diagonal means D = 0.
SquareMatrixQ signed_adjacency(const Graph& g, const Signing& s, const std::vector<Rational>& diagonal = {});

/// 2|E| / n.
Rational avg_degree_bound(const Graph& g);

/// Default limit on |E| for anything that enumerates all signings.
constexpr std::size_t kExhaustionCap = 24;

struct TraceDisagreement {
  Signing first, second;
  std::size_t power = 0;
  Rational trace_first, trace_second;
};

struct InvarianceReport {
  bool invariant = true;
  bool exhaustive = true;
  std::uint64_t signings_checked = 0;
  std::optional<TraceDisagreement> witness;  // smallest disagreeing mask against the all-+1 signing
};

/// tr((D + A_s)^i), i = 1..k.
std::vector<Rational> trace_powers(const Graph& g, const Signing& s, const std::vector<Rational>& diagonal,
                                   std::size_t k);

/// Compares trace powers 1..k of D + A_s over all 2^|E| signings against the
/// all-+1 signing. Throws std::length_error when |E| exceeds the cap.
InvarianceReport check_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                                       std::size_t cap = kExhaustionCap);

bool verify_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                            std::size_t cap = kExhaustionCap);

/// Random signings instead of all of them; a clean run certifies nothing.
InvarianceReport sample_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                                        std::uint64_t samples, std::uint64_t seed);

struct SigningSearchResult {
  Signing signing;
  ExactPolynomial char_poly;
  RootInterval lambda_max;       // certified, width <= 2^-40
  std::uint64_t classes = 0;     // switching classes examined
  std::uint64_t distinct_polys = 0;
};

/// Signing with the smallest largest eigenvalue of A_s, lexicographically
/// first (+1 before -1, edge order) among all minimizers. Enumerates one
/// signing per switching class, which preserves the spectrum.
SigningSearchResult best_signing_search(const Graph& g, std::size_t cap = kExhaustionCap);

/// Exact decision lambda_max(char poly) <= 2 sqrt(d - 1).
bool within_ramanujan_bound(const ExactPolynomial& char_poly, std::size_t max_degree);

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::optional<std::size_t> girth;
  std::size_t max_degree = 0;
  Rational avg_degree;
};

/// "C_<n>", "K_<n>", "K_<d>,<d>", "cube" (or "Q_3"), "heawood", "tutte-coxeter".
/// Throws std::invalid_argument for anything else.
CatalogEntry high_girth_catalog(const std::string& name);

/// The fixed list of catalog names used by the test and acceptance suites.
std::vector<std::string> catalog_names();

/// Eigenvalues of a symmetric matrix in double precision, ascending.
/// Cross-check only; nothing is certified from it.
std::vector<double> float_spectrum(const SquareMatrixQ& a);

}  // namespace rootline
