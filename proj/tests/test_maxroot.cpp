#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootline/maxroot.hpp"

using namespace rootline;

namespace {

std::vector<Rational> R(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

Rational q(long a, long b) { return Rational(a) / Rational(b); }

Rational max_of(const std::vector<Rational>& mu) { return *std::max_element(mu.begin(), mu.end()); }

bool bracket_holds(const ApproxResult& r, const Rational& mu_max, std::size_t k, std::size_t n) {
  return r.estimate <= mu_max && mu_max <= alpha_factor(k, n) * r.estimate_upper;
}

}  // namespace

TEST_CASE("alpha_factor") {
  CHECK(alpha_factor(1, 7) == 7);
  CHECK(alpha_factor(1, 256) == 256);
  CHECK(alpha_factor(2, 16) == 4);
  auto big = alpha_factor(2000, 2000);
  CHECK(big > 1);
  CHECK(big < q(102, 100));
  CHECK_THROWS(alpha_factor(0, 4));
  CHECK_THROWS(alpha_factor(5, 4));
  // k = 3 is below ln 64 ~ 4.16; k = 5 is above
  CHECK(uses_power_sums(4, 64));
  CHECK_FALSE(uses_power_sums(5, 64));
}

TEST_CASE("root_sum_test") {
  CHECK(root_sum_test(profile_from_roots(R({1, 1}), 2), Rational(1)) == 2);
  CHECK(root_sum_test(profile_from_roots(R({1, 1}), 1), Rational(1)) == 2);
  CHECK(root_sum_test(profile_from_roots(R({1, 0}), 2), Rational(1)) == 0);
  // a full profile determines every power sum, so T_4 may be used with n = 2
  CHECK(root_sum_test(profile_from_roots(R({2, 0}), 2), Rational(1), 4) == 98);
  CHECK_THROWS_AS(root_sum_test(profile_from_roots(R({2, 0, 0}), 2), Rational(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(root_sum_test(profile_from_roots(R({1, 1}), 2), Rational(0)), std::invalid_argument);
}

TEST_CASE("approx_max_root examples") {
  SUBCASE("all ones") {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto r = approx_max_root(profile_from_roots(R({1, 1, 1, 1, 1, 1, 1, 1}), k));
      if (r.branch == Branch::power_sum) CHECK(r.estimate == 1);
      CHECK(bracket_holds(r, Rational(1), k, 8));
    }
  }
  SUBCASE("1,2,3,4 with k = 2") {
    // k = 2 exceeds ln 4, so the algorithm itself takes the loop; the
    // power-sum estimate and its factor are still available directly
    auto prof = profile_from_roots(R({1, 2, 3, 4}), 2);
    auto r = power_sum_estimate(prof);
    CHECK(r.estimate * r.estimate <= q(30, 4));
    CHECK(r.estimate_upper * r.estimate_upper >= q(30, 4));
    CHECK(to_double(r.estimate) == doctest::Approx(2.7386127875));
    CHECK(r.estimate <= 4);
    CHECK(4 <= 2 * r.estimate_upper);
    CHECK(r.factor == 2);
    auto loop = approx_max_root(prof);
    CHECK(loop.branch == Branch::chebyshev_loop);
    CHECK(bracket_holds(loop, Rational(4), 2, 4));
  }
  SUBCASE("1,2,3,4 with k = 4 runs the loop") {
    auto r = approx_max_root(profile_from_roots(R({1, 2, 3, 4}), 4));
    CHECK(r.branch == Branch::chebyshev_loop);
    CHECK(r.estimate <= 4);
    CHECK(4 <= loop_shrink(4, 4) * loop_shrink(4, 4) * r.estimate);
    CHECK(r.iterations <= iteration_bound(4, 4));
  }
  SUBCASE("zero roots") {
    auto r = approx_max_root(SymmetricProfile(5, R({0, 0})));
    CHECK(r.estimate == 0);
  }
  SUBCASE("single root") {
    auto r = approx_max_root(SymmetricProfile(1, {q(7, 3)}));
    CHECK(r.estimate == q(7, 3));
    CHECK(r.factor == 1);
  }
  SUBCASE("negative roots trip the cap or the sign checks") {
    CHECK_THROWS(approx_max_root(SymmetricProfile(4, R({-1}))));
  }
}

TEST_CASE("bracket, power-sum chain and scale equivariance on random vectors") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> den(1, 16);
  for (std::size_t n : {4u, 16u, 64u}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rational> mu;
      for (std::size_t i = 0; i < n; ++i) {
        int b = den(rng);
        mu.push_back(Rational(std::uniform_int_distribution<int>(0, 10 * b)(rng)) / Rational(b));
      }
      const Rational top = max_of(mu);
      for (std::size_t k : {std::size_t{1}, std::size_t{2}, std::size_t{5}, n}) {
        if (k > n) continue;
        auto prof = profile_from_roots(mu, k);
        auto r = approx_max_root(prof);
        CHECK(bracket_holds(r, top, k, n));
        if (r.branch == Branch::chebyshev_loop) CHECK(r.iterations <= iteration_bound(k, n));
        Rational pk = newton_power_sums(prof.e, k).back();
        CHECK(pk / Rational(static_cast<unsigned long>(n)) <= pow(top, static_cast<unsigned>(k)));
        CHECK(pow(top, static_cast<unsigned>(k)) <= pk);

        std::vector<Rational> scaled;
        const Rational c = q(3, 7);
        for (const auto& m : mu) scaled.push_back(c * m);
        auto rs = approx_max_root(profile_from_roots(scaled, k));
        CHECK(rs.branch == r.branch);
        if (r.branch == Branch::chebyshev_loop) {
          CHECK(rs.estimate == c * r.estimate);
          CHECK(rs.iterations == r.iterations);
        } else {
          CHECK(rs.estimate <= c * r.estimate_upper);
          CHECK(c * r.estimate <= rs.estimate_upper);
        }
      }
    }
  }
}

TEST_CASE("iteration bound formula") {
  CHECK(iteration_bound(4, 4) >= 2);
  CHECK(iteration_bound(256, 256) > iteration_bound(12, 256));
}
