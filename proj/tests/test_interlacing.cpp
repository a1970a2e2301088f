#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootline/interlacing.hpp"
#include "rootline/lowerbounds.hpp"
#include "rootline/symfuncs.hpp"

using namespace rootline;

namespace {

Rational q(long a, long b) { return Rational(a) / Rational(b); }

VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

ExactPolynomial from_top(const std::vector<Rational>& top) { return ExactPolynomial(std::vector<Rational>(top.rbegin(), top.rend())); }

std::vector<Rational> top_of(const ExactPolynomial& p, std::size_t k) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i <= k; ++i) out.push_back(p.top(i));
  return out;
}

KSInstance random_ks(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t support) {
  KSInstance inst;
  inst.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<KSChoice> s;
    std::vector<long> weights;
    long total = 0;
    for (std::size_t j = 0; j < support; ++j) {
      weights.push_back(1 + static_cast<long>(rng() % 4));
      total += weights.back();
    }
    for (std::size_t j = 0; j < support; ++j) {
      VectorQ v(static_cast<Eigen::Index>(n));
      for (std::size_t r = 0; r < n; ++r) v(static_cast<Eigen::Index>(r)) = Rational(static_cast<long>(rng() % 5) - 2);
      s.push_back({v, q(weights[j], total)});
    }
    inst.supports.push_back(std::move(s));
  }
  return inst;
}

SRInstance random_sr(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  SRInstance inst;
  inst.n = n;
  inst.m = m;
  std::vector<long> w(std::size_t{1} << m);
  long total = 0;
  for (auto& x : w) {
    x = rng() % 3 == 0 ? 0 : 1 + static_cast<long>(rng() % 3);
    total += x;
  }
  if (total == 0) {
    w[0] = 1;
    total = 1;
  }
  for (long x : w) inst.table.push_back(q(x, total));
  for (std::size_t i = 0; i < m; ++i) {
    VectorQ v(static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) v(static_cast<Eigen::Index>(r)) = Rational(static_cast<long>(rng() % 5) - 2);
    inst.vectors.push_back(v);
  }
  return inst;
}

// every prefix of every length, checked against the sum over its children
void check_refinement(const FamilyOracle& oracle) {
  const auto& spec = oracle.spec();
  std::vector<std::size_t> prefix;
  std::function<void()> walk = [&] {
    const std::size_t k = spec.degree;
    auto parent = oracle.top_coefficients(prefix, k);
    if (prefix.size() == spec.depth()) {
      ExactPolynomial leaf = oracle.leaf_polynomial(prefix);
      CHECK(parent.has_value() == !leaf.is_zero());
      if (parent) CHECK(from_top(*parent) == leaf);
      return;
    }
    std::vector<Rational> sum(k + 1, Rational(0));
    for (std::size_t c = 0; c < spec.choices[prefix.size()]; ++c) {
      prefix.push_back(c);
      if (auto child = oracle.top_coefficients(prefix, k))
        for (std::size_t j = 0; j <= k; ++j) sum[j] += (*child)[j];
      walk();
      prefix.pop_back();
    }
    CHECK(sum == (parent ? *parent : std::vector<Rational>(k + 1, Rational(0))));
  };
  walk();
}

// Lies about one coefficient at depth 2.
class Tampered final : public FamilyOracle {
 public:
  explicit Tampered(std::unique_ptr<FamilyOracle> inner) : inner_(std::move(inner)) {}
  const FamilySpec& spec() const override { return inner_->spec(); }
  std::optional<std::vector<Rational>> top_coefficients(const std::vector<std::size_t>& prefix, std::size_t k) const override {
    auto c = inner_->top_coefficients(prefix, k);
    if (c && prefix.size() == 2 && prefix[0] == 0 && k >= 1) (*c)[1] += 1;
    return c;
  }
  ExactPolynomial leaf_polynomial(const std::vector<std::size_t>& a) const override { return inner_->leaf_polynomial(a); }

 private:
  std::unique_ptr<FamilyOracle> inner_;
};

}  // namespace

TEST_CASE("common interlacing") {
  ExactPolynomial p = polynomial_from_roots(std::vector<Rational>{Rational(1), Rational(3), Rational(4)});
  CHECK(check_common_interlacing({p, p, p}));
  ExactPolynomial a = polynomial_from_roots(std::vector<Rational>{Rational(1), Rational(2)});
  ExactPolynomial b = polynomial_from_roots(std::vector<Rational>{Rational(5), Rational(6)});
  CHECK_FALSE(check_common_interlacing({a, b}));
  ExactPolynomial c = polynomial_from_roots(std::vector<Rational>{Rational(0), Rational(2)});
  ExactPolynomial d = polynomial_from_roots(std::vector<Rational>{Rational(1), Rational(3)});
  CHECK(check_common_interlacing({c, d}));
  // touching chains are allowed
  ExactPolynomial e = polynomial_from_roots(std::vector<Rational>{Rational(2), Rational(4)});
  CHECK(check_common_interlacing({c, e}));

  auto noisy = noisy_pair(2, 4);
  CHECK(check_common_interlacing({noisy.pair.p, noisy.pair.q}));

  CHECK_THROWS_AS(check_common_interlacing({ExactPolynomial({Rational(1), Rational(0), Rational(1)})}), std::invalid_argument);
  CHECK_THROWS_AS(check_common_interlacing({a, p}), std::invalid_argument);
}

TEST_CASE("ks oracle examples") {
  KSInstance inst;
  inst.n = 2;
  for (int i = 0; i < 2; ++i) inst.supports.push_back({{vec({1, 0}), q(1, 2)}, {vec({0, 1}), q(1, 2)}});
  auto oracle = ks_oracle(inst);
  auto top = oracle->top_coefficients({}, 2);
  REQUIRE(top);
  // outcomes: 2 e1 e1^T, e1e1^T + e2e2^T (twice), 2 e2 e2^T
  ExactPolynomial brute = (ExactPolynomial({Rational(0), Rational(-2), Rational(1)}) * Rational(2) +
                           ExactPolynomial({Rational(1), Rational(-2), Rational(1)}) * Rational(2)) *
                          q(1, 4);
  CHECK(from_top(*top) == brute);
  CHECK(from_top(*top) == ks_expected_char_poly(inst));
  // k = 1: -sum E |r_i|^2
  CHECK((*oracle->top_coefficients({}, 1))[1] == -2);
  // full prefix: the deterministic characteristic polynomial, weighted
  auto leaf = oracle->top_coefficients({0, 1}, 2);
  CHECK(from_top(*leaf) == ExactPolynomial({Rational(1), Rational(-2), Rational(1)}) * q(1, 4));
  CHECK_THROWS_AS(oracle->top_coefficients({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(oracle->top_coefficients({2}, 1), std::invalid_argument);
}

TEST_CASE("ks instance validation") {
  KSInstance inst;
  inst.n = 2;
  inst.supports.push_back({{vec({1, 0}), q(1, 2)}, {vec({0, 1}), q(1, 3)}});
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
  inst.supports[0][1].probability = q(1, 2);
  CHECK_NOTHROW(inst.validate());
  inst.supports[0][1].vector = vec({1, 2, 3});
  CHECK_THROWS_AS(inst.validate(), std::invalid_argument);
}

TEST_CASE("ks oracle matches brute force and refines consistently") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(rng() % 4), n = 2 + static_cast<std::size_t>(rng() % 3);
    auto inst = random_ks(rng, m, n, 2 + static_cast<std::size_t>(rng() % 2));
    auto oracle = ks_oracle(inst);
    CHECK(from_top(*oracle->top_coefficients({}, n)) == ks_expected_char_poly(inst));
    CHECK(from_top(*oracle->top_coefficients({1}, n)) == ks_expected_char_poly(inst, {1}));
    auto partial = oracle->top_coefficients({0}, 1);
    CHECK(*partial == top_of(ks_expected_char_poly(inst, {0}), 1));
    check_refinement(*oracle);
  }
}

TEST_CASE("ks oracle with a zero-probability choice") {
  KSInstance inst;
  inst.n = 2;
  inst.supports.push_back({{vec({1, 0}), Rational(1)}, {vec({0, 1}), Rational(0)}});
  inst.supports.push_back({{vec({1, 1}), q(1, 2)}, {vec({0, 1}), q(1, 2)}});
  auto oracle = ks_oracle(inst);
  CHECK_FALSE(oracle->top_coefficients({1}, 2).has_value());
  CHECK(oracle->leaf_polynomial({1, 0}).is_zero());
  auto r = round_family(*oracle, q(1, 2));
  CHECK(r.assignment[0] == 0);
  CHECK(r.within_bound);
}

TEST_CASE("sr oracle examples") {
  SUBCASE("point mass") {
    SRInstance inst;
    inst.n = 2;
    inst.m = 2;
    inst.table = {Rational(0), Rational(0), Rational(0), Rational(1)};
    inst.vectors = {vec({1, 1}), vec({1, -1})};
    auto oracle = sr_oracle(inst);
    // v1 v1^T + v2 v2^T = 2I
    CHECK(from_top(*oracle->top_coefficients({}, 2)) == ExactPolynomial({Rational(4), Rational(-4), Rational(1)}));
    CHECK(inst.homogeneous());
  }
  SUBCASE("uniform over singletons") {
    SRInstance inst;
    inst.n = 2;
    inst.m = 2;
    inst.table = {Rational(0), q(1, 2), q(1, 2), Rational(0)};
    inst.vectors = {vec({1, 0}), vec({0, 1})};
    auto oracle = sr_oracle(inst);
    // each outcome has char poly (x - 1) x
    ExactPolynomial expect({Rational(0), Rational(-1), Rational(1)});
    CHECK(from_top(*oracle->top_coefficients({}, 2)) == expect);
    CHECK(from_top(*oracle->top_coefficients({}, 2)) == sr_expected_char_poly(inst));
    CHECK(from_top(*oracle->top_coefficients({1}, 2)) == expect * q(1, 2));
    CHECK(inst.homogeneous());
  }
  SUBCASE("conditioning on a null event") {
    SRInstance inst;
    inst.n = 1;
    inst.m = 2;
    inst.table = {q(1, 2), q(1, 2), Rational(0), Rational(0)};
    inst.vectors = {vec({1}), vec({2})};
    auto oracle = sr_oracle(inst);
    CHECK_FALSE(oracle->top_coefficients({0, 1}, 1).has_value());
    CHECK_FALSE(inst.homogeneous());
  }
}

TEST_CASE("sr oracle matches brute force and refines consistently") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 2 + static_cast<std::size_t>(rng() % 4), n = 2 + static_cast<std::size_t>(rng() % 3);
    auto inst = random_sr(rng, m, n);
    auto oracle = sr_oracle(inst);
    CHECK(from_top(*oracle->top_coefficients({}, n)) == sr_expected_char_poly(inst));
    check_refinement(*oracle);
  }
}

TEST_CASE("sr marginals sum to one for homogeneous tables") {
  // uniform over the 2-subsets of [4]; sigma_2 sums over 2-subsets T of P[T] det Gram
  SRInstance inst;
  inst.n = 4;
  inst.m = 4;
  inst.table.assign(16, Rational(0));
  for (std::size_t mask = 0; mask < 16; ++mask)
    if (__builtin_popcountll(mask) == 2) inst.table[mask] = q(1, 6);
  for (int i = 0; i < 4; ++i) {
    VectorQ v = VectorQ::Zero(4);
    v(i) = 1;
    inst.vectors.push_back(v);
  }
  // orthonormal vectors: det Gram = 1, so the x^{n-2} coefficient is sum_T P[T]
  auto oracle = sr_oracle(inst);
  CHECK((*oracle->top_coefficients({}, 2))[2] == 1);
}

TEST_CASE("rounding a single coordinate") {
  KSInstance inst;
  inst.n = 2;
  inst.supports.push_back({{vec({2, 0}), q(1, 2)}, {vec({1, 1}), q(1, 2)}});
  auto r = round_family(*ks_oracle(inst), q(1, 2));
  CHECK(r.group_size == 1);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].candidates == 2);
  // lambda_max 4 against 2
  CHECK(r.assignment == std::vector<std::size_t>{1});
  CHECK(r.within_bound);
}

TEST_CASE("rounding a family of identical leaves") {
  KSInstance inst;
  inst.n = 3;
  for (int i = 0; i < 5; ++i) inst.supports.push_back({{vec({1, 2, 0}), q(1, 3)}, {vec({1, 2, 0}), q(2, 3)}});
  auto r = round_family(*ks_oracle(inst), q(1, 8));
  CHECK(r.assignment == std::vector<std::size_t>(5, 0));
  CHECK(r.within_bound);
  CHECK(r.leaf_max.lo == r.root_max.lo);
  CHECK(r.leaf_max.hi == r.root_max.hi);
}

TEST_CASE("rounding against the exhaustive minimum") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    auto inst = random_ks(rng, 8, 4, 2);
    auto oracle = ks_oracle(inst);
    for (Rational eps : {q(1, 2), q(1, 8)}) {
      auto r = round_family(*oracle, eps);
      CHECK(r.group_size == 2);
      CHECK(r.steps.size() == 4);
      CHECK(r.k_requested == 4);
      CHECK(r.within_bound);
      CHECK(r.a_priori_factor <= 1 + eps);
      auto ex = exhaustive_leaf_minimum(*oracle);
      CHECK(ex.leaves == 256);
      // the interlacing guarantee: some leaf sits below the root polynomial
      CHECK(ex.best_max.lo <= r.root_max.hi);
      CHECK(r.leaf_max.hi >= ex.best_max.lo);
    }
  }
}

TEST_CASE("rounding rejects an inconsistent oracle") {
  std::mt19937_64 rng(5);
  Tampered bad(ks_oracle(random_ks(rng, 3, 2, 2)));
  CHECK_THROWS_AS(round_family(bad, q(1, 2)), std::runtime_error);
  CHECK_THROWS_AS(round_family(*ks_oracle(random_ks(rng, 3, 2, 2)), Rational(0)), std::invalid_argument);
}

TEST_CASE("rounding an sr family") {
  std::mt19937_64 rng(3);
  auto inst = random_sr(rng, 6, 3);
  auto r = round_family(*sr_oracle(inst), q(1, 4));
  CHECK(r.assignment.size() == 6);
  CHECK(r.within_bound);
}
