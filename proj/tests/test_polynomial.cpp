#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootline/matrix.hpp"
#include "rootline/polynomial.hpp"
#include "rootline/roots.hpp"

using namespace rootline;

namespace {

ExactPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

MatrixQ M(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long x : r) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

// Laplace expansion along the first row, polynomial entries.
ExactPolynomial det_by_minors(const std::vector<std::vector<ExactPolynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  ExactPolynomial total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<ExactPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ExactPolynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    ExactPolynomial term = a[0][j] * det_by_minors(minor);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

MatrixQ random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng)) / Rational(den(rng));
  return m;
}

}  // namespace

TEST_CASE("add and multiply") {
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  CHECK(P({3, 0, 2}) * P({1}) == P({3, 0, 2}));
  CHECK(power(P({0, -3, 0, 4}), 2) == P({0, 0, 9, 0, -24, 0, 16}));
  CHECK(P({1, 2}) + P({-1, -2}) == ExactPolynomial());
  CHECK((P({1, 2}) * P({0, 0, 5})).degree() == 3);
}

TEST_CASE("compose") {
  CHECK(compose(P({0, 0, 1}), P({1, 1})) == P({1, 2, 1}));
  const auto q = P({4, -1, 7});
  CHECK(compose(P({0, 1}), q) == q);
  CHECK(compose(q, P({0, 1})) == q);
  CHECK(compose(P({-2, 0, 1}), P({-1, 0, 2})) == P({-1, 0, -4, 0, 4}));
}

TEST_CASE("shift_scale") {
  CHECK(shift_scale(P({-1, 1}), Rational(2), Rational(3)) == P({-5, 1}));
  CHECK(shift_scale(P({-1, 0, 1}), Rational(1), Rational(0)) == P({-1, 0, 1}));
  CHECK(shift_scale(P({2, -3, 1}), Rational(1), Rational(1)) == P({6, -5, 1}));
  CHECK_THROWS_AS(shift_scale(P({2, -3, 1}), Rational(0), Rational(1)), std::invalid_argument);

  SUBCASE("sign and root multiset are preserved") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(-5, 5), pos(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> roots;
      for (int i = 0; i < 4; ++i) roots.push_back(Rational(small(rng)) / Rational(pos(rng)));
      ExactPolynomial p = Rational(trial % 2 == 0 ? -3 : 2) * ExactPolynomial::constant(Rational(1));
      for (const auto& r : roots) p *= ExactPolynomial::linear_factor(r);
      Rational a = Rational(small(rng) == 0 ? 1 : small(rng) | 1) / Rational(pos(rng));
      Rational b = Rational(small(rng)) / Rational(pos(rng));
      ExactPolynomial q = shift_scale(p, a, b);
      CHECK(sign(q.leading()) == sign(p.leading()));
      ExactPolynomial expect = ExactPolynomial::constant(Rational(sign(p.leading())));
      for (const auto& r : roots) expect *= ExactPolynomial::linear_factor(a * r + b);
      CHECK(q == expect);
      auto iv = real_roots(q);
      CHECK(iv.size() <= 4);
      std::size_t total = 0;
      for (const auto& r : iv) total += r.multiplicity;
      CHECK(total == 4);
    }
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(SquareMatrixQ(M({{0, 0}, {0, 0}}))) == P({0, 0, 1}));
  CHECK(char_poly(SquareMatrixQ(M({{0, 1}, {1, 0}}))) == P({-1, 0, 1}));
  CHECK(char_poly(SquareMatrixQ(M({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}))) == P({-2, -3, 0, 1}));
  CHECK_THROWS_AS(SquareMatrixQ(MatrixQ(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly agrees with expansion by minors") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      MatrixQ a = random_matrix(rng, n);
      std::vector<std::vector<ExactPolynomial>> xa(n, std::vector<ExactPolynomial>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          xa[i][j] = (i == j ? ExactPolynomial::identity() : ExactPolynomial()) - ExactPolynomial::constant(a(i, j));
      CHECK(char_poly(SquareMatrixQ(a)) == det_by_minors(xa));
      SquareMatrixQ sa(a);
      CHECK(sigma_k(sa, 0) == 1);
      CHECK(sigma_k(sa, 1) == a.trace());
      CHECK(sigma_k(sa, static_cast<std::size_t>(n)) == determinant<Rational>(a));
    }
  }
}

TEST_CASE("sigma_k examples") {
  CHECK(sigma_k(SquareMatrixQ(M({{1, 0}, {0, 2}})), 2) == 2);
  CHECK(sigma_k(SquareMatrixQ(M({{0, 1}, {1, 0}})), 2) == -1);
  CHECK(sigma_k(SquareMatrixQ(M({{3, 5}, {7, 4}})), 1) == 7);
  CHECK_THROWS_AS(sigma_k(SquareMatrixQ(M({{0, 1}, {1, 0}})), 3), std::out_of_range);
}

TEST_CASE("symmetric flag") {
  CHECK(SquareMatrixQ(M({{0, 1}, {1, 0}})).symmetric());
  CHECK_FALSE(SquareMatrixQ(M({{0, 1}, {2, 0}})).symmetric());
}

TEST_CASE("gcd and squarefree decomposition") {
  auto p = power(P({-1, 1}), 3) * P({2, 1}) * power(P({0, 1}), 2);
  auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == P({2, 1}));
  CHECK(f[1] == P({0, 1}));
  CHECK(f[2] == P({-1, 1}));
  CHECK(gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
  auto [q, r] = divmod(P({-1, 0, 0, 1}), P({-1, 1}));
  CHECK(q == P({1, 1, 1}));
  CHECK(r.is_zero());
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK(to_decimal(Rational(1) / Rational(3), 4) == "0.3333");
  CHECK(to_decimal(Rational(-5) / Rational(2), 2) == "-2.50");
}

TEST_CASE("certified root and log brackets") {
  for (unsigned k : {2u, 3u, 5u, 7u}) {
    for (long x : {2L, 10L, 1000L}) {
      auto [lo, hi] = kth_root_bounds(Rational(x), k);
      CHECK(pow(lo, k) <= x);
      CHECK(pow(hi, k) >= x);
      CHECK(hi - lo <= lo * pow2(-60));
    }
  }
  auto [a, b] = kth_root_bounds(Rational(16), 2);
  CHECK(a == 4);
  CHECK(b == 4);
  auto [c, d] = kth_root_bounds(Rational(27) / Rational(8), 3);
  CHECK(c == Rational(3) / Rational(2));
  CHECK(d == c);
  auto [l, u] = log_bounds(1000);
  CHECK(l < u);
  CHECK(to_double(l) == doctest::Approx(6.907755278982137));
  CHECK(exp_at_most(2, 8));
  CHECK_FALSE(exp_at_most(3, 20));
  CHECK(exp_at_most(3, 21));
  CHECK(exp_at_most(0, 1));
  auto [cl, ch] = cos_pi_bounds(Rational(1) / Rational(3));
  CHECK(cl == Rational(1) / Rational(2));
  CHECK(ch == cl);
  auto [sl, sh] = cos_pi_bounds(Rational(1) / Rational(4));
  CHECK(sl < sh);
  CHECK(2 * sl * sl < 1);
  CHECK(2 * sh * sh > 1);
}
