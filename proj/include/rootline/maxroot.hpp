// Largest root of a real-rooted polynomial with nonnegative roots, estimated
// from its top k coefficients.
#pragma once

#include <cstddef>
#include <string>

#include "rootline/symfuncs.hpp"

namespace rootline {

enum class Branch { power_sum, chebyshev_loop };

std::string to_string(Branch b);

struct ApproxResult {
  Rational estimate;       // certified lower bound on mu_max
  Rational estimate_upper; // upper end of the certified interval around the returned value
  Rational factor;         // mu_max <= factor * estimate_upper
  std::size_t iterations = 0;
  Branch branch = Branch::power_sum;

  friend bool operator==(const ApproxResult&, const ApproxResult&) = default;
};

/// True when k <= ln n (decided exactly).
bool uses_power_sums(std::size_t k, std::size_t n);

/// Per-iteration shrink factor of the loop, 1 + (20 L / k)^2 with L a
/// rational upper bound on ln n.
Rational loop_shrink(std::size_t k, std::size_t n);

/// Rational upper bound on the guarantee: n^{1/k} rounded up when k <= ln n,
/// otherwise the square of loop_shrink(k, n).
Rational alpha_factor(std::size_t k, std::size_t n);

/// Closed-form iteration bound ceil(1 + ln n / ln(1 + (20 ln n / k)^2)) + 1,
/// evaluated from below so that comparing against it is conservative.
std::size_t iteration_bound(std::size_t k, std::size_t n);

/// sum_i T_k(mu_i / t) from the profile alone, k = prof.k().
Rational root_sum_test(const SymmetricProfile& prof, const Rational& t);
/// Same with T_degree; degree may exceed k only for a full profile (k == n).
Rational root_sum_test(const SymmetricProfile& prof, const Rational& t, std::size_t degree);

/// (p_k / n)^{1/k} as a certified interval [estimate, estimate_upper] with
/// factor n^{1/k} rounded up, for any k (the first branch of the algorithm).
ApproxResult power_sum_estimate(const SymmetricProfile& prof);

/// Iteration cap 10 k^2 + 100; exceeding it throws std::runtime_error.
ApproxResult approx_max_root(const SymmetricProfile& prof);

}  // namespace rootline
