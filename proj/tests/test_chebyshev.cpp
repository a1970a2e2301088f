#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rootline/chebyshev.hpp"
#include "rootline/matrix.hpp"

using namespace rootline;

namespace {

ExactPolynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPolynomial(std::move(v));
}

Rational q(long a, long b) { return Rational(a) / Rational(b); }

}  // namespace

TEST_CASE("cheb_poly") {
  CHECK(cheb_poly(0) == P({1}));
  CHECK(cheb_poly(1) == P({0, 1}));
  CHECK(cheb_poly(2) == P({-1, 0, 2}));
  CHECK(cheb_poly(3) == P({0, -3, 0, 4}));
  for (unsigned k = 1; k <= 40; ++k) {
    CHECK(cheb_poly(k).degree() == static_cast<int>(k));
    CHECK(cheb_poly(k).leading() == pow2(static_cast<int>(k) - 1));
  }
}

TEST_CASE("cheb_eval") {
  for (unsigned k = 0; k < 30; ++k) CHECK(cheb_eval(k, Rational(1)) == 1);
  CHECK(cheb_eval(4, Rational(0)) == 1);
  CHECK(cheb_eval(2, Rational(0)) == -1);
  CHECK(cheb_eval(2, q(3, 2)) == q(7, 2));
  CHECK(cheb_eval(4, Rational(2)) == 97);
}

TEST_CASE("recurrence and expansion agree") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  for (unsigned k = 0; k <= 24; ++k) {
    const auto t = cheb_poly(k);
    for (int s = 0; s < 5; ++s) {
      Rational x = Rational(num(rng)) / Rational(den(rng));
      CHECK(t(x) == cheb_eval(k, x));
    }
  }
}

TEST_CASE("bounded on [-1, 1]") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> num(-1000, 1000);
  for (int s = 0; s < 200; ++s) {
    Rational x = Rational(num(rng)) / 1000;
    for (unsigned k = 0; k <= 64; k += 7) {
      Rational v = cheb_eval(k, x);
      CHECK(v >= -1);
      CHECK(v <= 1);
    }
  }
}

TEST_CASE("increasing beyond 1") {
  for (unsigned k = 1; k <= 20; ++k) {
    Rational prev = cheb_eval(k, Rational(1));
    for (int i = 1; i <= 40; ++i) {
      Rational v = cheb_eval(k, 1 + q(i, 8));
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("composition law") {
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned b = 0; b <= 8; ++b) CHECK(compose(cheb_poly(a), cheb_poly(b)) == cheb_poly(a * b));
}

TEST_CASE("double angle") {
  const auto one = ExactPolynomial::constant(Rational(1));
  for (unsigned k = 0; k <= 16; ++k) {
    auto t = cheb_poly(k);
    CHECK(Rational(2) * t * t - one == cheb_poly(2 * k));
  }
}

TEST_CASE("shifted roots") {
  auto r1 = cheb_shifted_roots(1, Rational(0));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].exact());
  CHECK(r1[0].lo == 1);

  auto r2 = cheb_shifted_roots(2, Rational(1));
  for (const auto& r : r2) {
    CHECK(r.exact());
    CHECK(r.lo == 0);
  }

  auto r3 = cheb_shifted_roots(3, Rational(0));
  CHECK(r3[0].lo == 1);
  CHECK(r3[1].lo == q(-1, 2));
  CHECK(r3[2].lo == q(-1, 2));

  SUBCASE("intervals bracket the roots of T_n - cos theta") {
    for (unsigned n = 1; n <= 9; ++n) {
      for (auto angle : {Rational(0), q(1, 3), q(1, 2), q(1, 5), q(3, 7), Rational(1)}) {
        auto [clo, chi] = cos_pi_bounds(angle);
        auto roots = cheb_shifted_roots(n, angle);
        REQUIRE(roots.size() == n);
        for (const auto& r : roots) {
          // T_n(root) = cos theta lies in [clo, chi]; at a double root T_n
          // touches the level without crossing, so allow a tiny gap
          Rational a = cheb_eval(n, r.lo), b = cheb_eval(n, r.hi);
          Rational lo = std::min(a, b), hi = std::max(a, b);
          CHECK(lo <= chi + pow2(-100));
          CHECK(hi >= clo - pow2(-100));
          CHECK(r.width() <= pow2(-150));
        }
      }
    }
  }

  SUBCASE("agree with exact isolation for rational cosines") {
    for (unsigned n = 1; n <= 8; ++n) {
      for (auto angle : {Rational(0), q(1, 3), q(1, 2), Rational(1)}) {
        Rational c = cos_pi_bounds(angle).first;
        auto exact = real_roots(cheb_poly(n) - ExactPolynomial::constant(c), pow2(-100));
        std::size_t total = 0;
        for (const auto& e : exact) total += e.multiplicity;
        CHECK(total == n);
        for (const auto& r : cheb_shifted_roots(n, angle)) {
          bool found = false;
          for (const auto& e : exact) found = found || (r.lo <= e.hi && e.lo <= r.hi);
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("growth lower bound") {
  CHECK(cheb_growth_lower_bound(5, Rational(0)) == q(1, 2));
  CHECK(cheb_growth_lower_bound(1, Rational(2)) == q(3, 2));
  CHECK(cheb_growth_lower_bound(3, q(1, 2)) == 4);
  for (unsigned k = 1; k <= 30; ++k) {
    for (int i = 0; i <= 12; ++i) {
      Rational x = q(i * i, 7);
      Rational b = cheb_growth_lower_bound(k, x);
      CHECK(b <= cheb_eval(k, 1 + x));
      double exact = std::pow(1 + std::sqrt(2 * to_double(x)), k) / 2;
      CHECK(to_double(b) >= exact * (1 - 1e-12));
    }
  }
}

TEST_CASE("cycle determinant identity, corrected constant") {
  for (int n = 3; n <= 8; ++n) {
    MatrixQ twice_x_minus_a(n, n);
    // det(2xI - A_n) = 2^n det(xI - A_n / 2)
    MatrixQ half(n, n);
    half.setZero();
    for (int i = 0; i < n; ++i) {
      half(i, (i + 1) % n) = q(1, 2);
      half((i + 1) % n, i) = q(1, 2);
    }
    ExactPolynomial lhs = char_poly(SquareMatrixQ(half)) * pow2(n);
    ExactPolynomial rhs = Rational(2) * cheb_poly(static_cast<unsigned>(n)) - ExactPolynomial::constant(Rational(2));
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs == Rational(2) * cheb_poly(static_cast<unsigned>(n)));
  }
}
