#include "rootline/graphs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <regex>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rootline/parallel.hpp"

namespace rootline {

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : n_(n), adj_(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (a == b) throw std::invalid_argument("Graph: self-loop");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw std::invalid_argument("Graph: repeated edge");
    adj_[a].push_back({b, edges_.size()});
    adj_[b].push_back({a, edges_.size()});
    edges_.push_back({a, b});
  }
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

Signing all_positive(const Graph& g) { return Signing(g.edge_count(), 1); }

Signing signing_from_mask(const Graph& g, std::uint64_t mask) {
  Signing s(g.edge_count(), 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (mask >> i & 1u) s[i] = -1;
  return s;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n), via(n);
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    via[root] = unseen;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (auto [w, e] : g.neighbours(u)) {
        if (e == via[u]) continue;
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          queue.push(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (auto [w, e] : g.neighbours(u)) {
        (void)e;
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void check_signing(const Graph& g, const Signing& s) {
  if (s.size() != g.edge_count()) throw std::invalid_argument("signing does not cover the edge set");
  for (int v : s)
    if (v != 1 && v != -1) throw std::invalid_argument("signing values must be +1 or -1");
}

void check_diagonal(const Graph& g, const std::vector<Rational>& diagonal) {
  if (!diagonal.empty() && diagonal.size() != g.vertex_count()) {
    throw std::invalid_argument("diagonal length differs from the vertex count");
  }
}

// tr(M^i) for i = 1..k with M = diag + weight * A_s, using
// tr(M^{2j}) = |M^j|_F^2 and tr(M^{2j+1}) = <M^j, M^{j+1}> for symmetric M.
template <typename T>
std::vector<T> traces_for(const Graph& g, const std::vector<T>& diag, const std::vector<T>& weight, std::size_t k) {
  const std::size_t n = g.vertex_count();
  std::vector<T> out(k, T(0));
  if (k == 0) return out;
  const std::size_t top = (k + 1) / 2;
  std::vector<T> cur(n * n, T(0)), next(n * n, T(0));
  for (std::size_t v = 0; v < n; ++v) {
    cur[v * n + v] = diag[v];
    for (auto [w, e] : g.neighbours(v)) cur[v * n + w] = weight[e];
  }
  T tr(0);
  for (std::size_t v = 0; v < n; ++v) tr += diag[v];
  out[0] = tr;
  for (std::size_t j = 1; j <= top; ++j) {
    const bool need_next = 2 * j + 1 <= k;
    if (2 * j <= k) {
      T s(0);
      for (const auto& x : cur) s += x * x;
      out[2 * j - 1] = s;
    }
    if (!need_next && j == top) break;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        T acc = cur[r * n + c] * diag[c];
        for (auto [x, e] : g.neighbours(c)) acc += cur[r * n + x] * weight[e];
        next[r * n + c] = acc;
      }
    }
    if (need_next) {
      T s(0);
      for (std::size_t i = 0; i < n * n; ++i) s += cur[i] * next[i];
      out[2 * j] = s;
    }
    std::swap(cur, next);
  }
  return out;
}

std::vector<Rational> full_diagonal(const Graph& g, const std::vector<Rational>& diagonal) {
  return diagonal.empty() ? std::vector<Rational>(g.vertex_count(), Rational(0)) : diagonal;
}

}  // namespace

SquareMatrixQ signed_adjacency(const Graph& g, const Signing& s, const std::vector<Rational>& diagonal) {
  check_signing(g, s);
  check_diagonal(g, diagonal);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n && !diagonal.empty(); ++i) m(i, i) = diagonal[static_cast<std::size_t>(i)];
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto u = static_cast<Eigen::Index>(g.edges()[e].u), v = static_cast<Eigen::Index>(g.edges()[e].v);
    m(u, v) = m(v, u) = Rational(s[e]);
  }
  return SquareMatrixQ(std::move(m));
}

Rational avg_degree_bound(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("average degree of the empty graph");
  return Rational(static_cast<unsigned long>(2 * g.edge_count())) / Rational(static_cast<unsigned long>(g.vertex_count()));
}

std::vector<Rational> trace_powers(const Graph& g, const Signing& s, const std::vector<Rational>& diagonal,
                                   std::size_t k) {
  check_signing(g, s);
  check_diagonal(g, diagonal);
  std::vector<Rational> weight;
  for (int v : s) weight.emplace_back(v);
  return traces_for<Rational>(g, full_diagonal(g, diagonal), weight, k);
}

namespace {

InvarianceReport run_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                                const std::vector<std::uint64_t>& masks_or_empty, std::uint64_t total) {
  const std::vector<Rational> diag = full_diagonal(g, diagonal);
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  auto mask_at = [&](std::uint64_t i) { return masks_or_empty.empty() ? i : masks_or_empty[i]; };

  // Scale D + A_s by the common denominator so the traces become integers;
  // use machine integers when n R^k provably fits.
  Integer scale(1);
  for (const auto& d : diag) scale = boost::multiprecision::lcm(scale, denom(d));
  Rational row(0);
  for (std::size_t v = 0; v < n; ++v) row = std::max(row, abs(diag[v] * Rational(scale)) + Rational(scale) * Rational(static_cast<unsigned long>(g.degree(v))));
  const bool small = Rational(static_cast<unsigned long>(std::max<std::size_t>(n, 1))) * pow(row, static_cast<unsigned>(k)) < pow2(62);

  std::function<std::vector<Rational>(std::uint64_t)> rational_traces = [&](std::uint64_t mask) {
    return trace_powers(g, signing_from_mask(g, mask), diag, k);
  };

  InvarianceReport report;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  constexpr std::uint64_t block = 4096;
  const std::uint64_t blocks = (total + block - 1) / block;

  if (small) {
    const auto s = static_cast<std::int64_t>(scale);
    std::vector<std::int64_t> dl(n);
    for (std::size_t v = 0; v < n; ++v) dl[v] = static_cast<std::int64_t>(numer(diag[v] * Rational(scale)));
    std::vector<std::int64_t> plus(m, s);
    const std::vector<std::int64_t> reference = traces_for<std::int64_t>(g, dl, plus, k);
    parallel_blocks(static_cast<std::size_t>(blocks), [&](std::size_t b) {
      const std::uint64_t lo = b * block, hi = std::min(total, lo + block);
      if (lo >= best.load()) return;
      std::vector<std::int64_t> weight(m);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint64_t mask = mask_at(i);
        for (std::size_t e = 0; e < m; ++e) weight[e] = (mask >> e & 1u) ? -s : s;
        if (traces_for<std::int64_t>(g, dl, weight, k) != reference) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  } else {
    const std::vector<Rational> reference = rational_traces(0);
    parallel_blocks(static_cast<std::size_t>(blocks), [&](std::size_t b) {
      const std::uint64_t lo = b * block, hi = std::min(total, lo + block);
      if (lo >= best.load()) return;
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (rational_traces(mask_at(i)) != reference) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }

  const std::uint64_t found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max()) {
    report.signings_checked = total;
    return report;
  }
  report.invariant = false;
  report.signings_checked = found + 1;
  TraceDisagreement w;
  w.first = all_positive(g);
  w.second = signing_from_mask(g, mask_at(found));
  auto a = trace_powers(g, w.first, diag, k), c = trace_powers(g, w.second, diag, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != c[i]) {
      w.power = i + 1;
      w.trace_first = a[i];
      w.trace_second = c[i];
      break;
    }
  }
  report.witness = std::move(w);
  return report;
}

}  // namespace

InvarianceReport check_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                                       std::size_t cap) {
  check_diagonal(g, diagonal);
  if (g.edge_count() > cap || g.edge_count() >= 63) {
    throw std::length_error("check_sign_invariance: " + std::to_string(g.edge_count()) +
                            " edges exceed the exhaustion cap; use sampling");
  }
  return run_invariance(g, diagonal, k, {}, std::uint64_t{1} << g.edge_count());
}

bool verify_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k, std::size_t cap) {
  return check_sign_invariance(g, diagonal, k, cap).invariant;
}

InvarianceReport sample_sign_invariance(const Graph& g, const std::vector<Rational>& diagonal, std::size_t k,
                                        std::uint64_t samples, std::uint64_t seed) {
  check_diagonal(g, diagonal);
  if (g.edge_count() > 64) throw std::length_error("sample_sign_invariance: more than 64 edges");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> masks(samples);
  const std::uint64_t keep = g.edge_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1;
  for (auto& m : masks) m = rng() & keep;
  InvarianceReport r = run_invariance(g, diagonal, k, masks, samples);
  r.exhaustive = false;
  return r;
}

namespace {

// Signing vectors as integers with edge 0 in the most significant position,
// so numeric order is lexicographic order with +1 (bit 0) before -1.
std::uint64_t lex_bit(std::size_t edge, std::size_t m) { return std::uint64_t{1} << (m - 1 - edge); }

// Fully reduced echelon basis of the cut space, highest pivot first.
std::vector<std::uint64_t> cut_space_basis(const Graph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::uint64_t> basis;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t x = 0;
    for (auto [w, e] : g.neighbours(v)) {
      (void)w;
      x ^= lex_bit(e, m);
    }
    for (auto b : basis) x = std::min(x, x ^ b);
    if (x == 0) continue;
    for (auto& b : basis) b = std::min(b, b ^ x);
    basis.push_back(x);
    std::sort(basis.begin(), basis.end(), std::greater<>());
    // re-reduce so each pivot appears in exactly one vector
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (i != j) basis[j] = std::min(basis[j], basis[j] ^ basis[i]);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  return basis;
}

std::uint64_t coset_minimum(std::uint64_t x, const std::vector<std::uint64_t>& basis) {
  for (auto b : basis) x = std::min(x, x ^ b);
  return x;
}

}  // namespace

SigningSearchResult best_signing_search(const Graph& g, std::size_t cap) {
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  if (m > cap || m >= 63) {
    throw std::length_error("best_signing_search: " + std::to_string(m) + " edges exceed the exhaustion cap");
  }
  if (m == 0) throw std::invalid_argument("best_signing_search: graph has no edges");
  // spanning forest; signings that agree off the forest up to switching
  // cover every switching class once
  std::vector<bool> tree(m, false), seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (auto [w, e] : g.neighbours(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        tree[e] = true;
        queue.push(w);
      }
    }
  }
  std::vector<std::size_t> free_edges;
  for (std::size_t e = 0; e < m; ++e)
    if (!tree[e]) free_edges.push_back(e);
  const std::uint64_t classes = std::uint64_t{1} << free_edges.size();
  auto class_signing = [&](std::uint64_t c) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < free_edges.size(); ++j)
      if (c >> j & 1u) mask |= std::uint64_t{1} << free_edges[j];
    return mask;
  };

  std::vector<ExactPolynomial> polys(classes);
  parallel_blocks(static_cast<std::size_t>(classes), [&](std::size_t c) {
    polys[c] = char_poly(signed_adjacency(g, signing_from_mask(g, class_signing(c))));
  });

  std::map<std::vector<Rational>, std::vector<std::uint64_t>> by_poly;
  for (std::uint64_t c = 0; c < classes; ++c) by_poly[polys[c].coeffs()].push_back(c);

  std::optional<IsolatedRoot> best_root;
  std::vector<std::uint64_t> best_classes;
  for (const auto& [coeffs, members] : by_poly) {
    IsolatedRoot root = *largest_root(ExactPolynomial(coeffs));
    auto order = best_root ? compare(root, *best_root) : std::strong_ordering::less;
    if (order == std::strong_ordering::less) {
      best_root = root;
      best_classes = members;
    } else if (order == std::strong_ordering::equal) {
      best_classes.insert(best_classes.end(), members.begin(), members.end());
    }
  }

  const auto basis = cut_space_basis(g);
  std::uint64_t best_lex = std::numeric_limits<std::uint64_t>::max();
  for (auto c : best_classes) {
    const std::uint64_t mask = class_signing(c);
    std::uint64_t lex = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1u) lex |= lex_bit(e, m);
    best_lex = std::min(best_lex, coset_minimum(lex, basis));
  }
  std::uint64_t mask = 0;
  for (std::size_t e = 0; e < m; ++e)
    if (best_lex & lex_bit(e, m)) mask |= std::uint64_t{1} << e;

  SigningSearchResult r;
  r.signing = signing_from_mask(g, mask);
  r.char_poly = char_poly(signed_adjacency(g, r.signing));
  IsolatedRoot root = *largest_root(r.char_poly);
  root.refine_to(pow2(-40));
  r.lambda_max = root.interval();
  r.classes = classes;
  r.distinct_polys = by_poly.size();
  return r;
}

bool within_ramanujan_bound(const ExactPolynomial& char_poly, std::size_t max_degree) {
  auto lambda = largest_root(char_poly);
  if (!lambda) throw std::domain_error("within_ramanujan_bound: no real root");
  if (max_degree <= 1) return compare(*lambda, Rational(0)) != std::strong_ordering::greater;
  // 2 sqrt(d - 1) is the largest root of x^2 - 4(d - 1)
  ExactPolynomial bound({Rational(-4 * static_cast<long>(max_degree - 1)), Rational(0), Rational(1)});
  return compare(*lambda, *largest_root(bound)) != std::strong_ordering::greater;
}

namespace {

Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph lcf(std::size_t n, const std::vector<int>& pattern) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (seen.insert({a, b}).second) e.push_back({a, b});
  };
  for (std::size_t i = 0; i < n; ++i) add(i, (i + 1) % n);
  for (std::size_t i = 0; i < n; ++i) {
    const long jump = pattern[i % pattern.size()];
    const long target = ((static_cast<long>(i) + jump) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
    add(i, static_cast<std::size_t>(target));
  }
  return Graph(n, e);
}

}  // namespace

CatalogEntry high_girth_catalog(const std::string& name) {
  Graph g;
  std::smatch match;
  static const std::regex cycle_re("C_([0-9]+)"), complete_re("K_([0-9]+)"), bipartite_re("K_([0-9]+),([0-9]+)");
  if (std::regex_match(name, match, cycle_re)) {
    const std::size_t n = std::stoul(match[1]);
    if (n < 3 || n > 4096) throw std::invalid_argument("cycle length must be in [3, 4096]");
    g = cycle(n);
  } else if (std::regex_match(name, match, complete_re)) {
    const std::size_t n = std::stoul(match[1]);
    if (n < 2 || n > 64) throw std::invalid_argument("complete graph size must be in [2, 64]");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
    g = Graph(n, e);
  } else if (std::regex_match(name, match, bipartite_re)) {
    const std::size_t a = std::stoul(match[1]), b = std::stoul(match[2]);
    if (a < 1 || b < 1 || a > 64 || b > 64) throw std::invalid_argument("K_a,b sides must be in [1, 64]");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) e.push_back({i, a + j});
    g = Graph(a + b, e);
  } else if (name == "cube" || name == "Q_3") {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 0; v < 8; ++v)
      for (std::size_t bit = 1; bit < 8; bit <<= 1)
        if ((v & bit) == 0) e.push_back({v, v | bit});
    g = Graph(8, e);
  } else if (name == "heawood") {
    // points 0..6, lines 7..13; point j lies on line i iff j - i is 0, 1 or 3 mod 7
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t d : {0u, 1u, 3u}) e.push_back({(i + d) % 7, 7 + i});
    g = Graph(14, e);
  } else if (name == "tutte-coxeter") {
    g = lcf(30, {-13, -9, 7, -7, 9, 13});
  } else {
    throw std::invalid_argument("unknown catalog graph '" + name + "'");
  }
  CatalogEntry entry;
  entry.name = name;
  entry.girth = girth(g);
  entry.max_degree = g.max_degree();
  entry.avg_degree = avg_degree_bound(g);
  entry.graph = std::move(g);
  return entry;
}

std::vector<std::string> catalog_names() {
  return {"C_4", "C_6", "C_8", "C_10", "cube", "heawood", "tutte-coxeter", "K_2,2", "K_3,3", "K_4,4"};
}

std::vector<double> float_spectrum(const SquareMatrixQ& a) {
  if (!a.symmetric()) throw std::invalid_argument("float_spectrum: matrix is not symmetric");
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = to_double(a.entries()(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace rootline
