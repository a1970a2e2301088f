// Elementary symmetric polynomials, power sums and Newton's identities.
//
// A SymmetricProfile is what is known about an unknown root vector mu of
// length n: its first k elementary symmetric values e_1..e_k. Everything here
// is exact.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rootline/polynomial.hpp"

namespace rootline {

struct SymmetricProfile {
  std::size_t n = 0;
  std::vector<Rational> e;  // e_1..e_k

  SymmetricProfile() = default;
  SymmetricProfile(std::size_t count, std::vector<Rational> elementary);
  std::size_t k() const { return e.size(); }
  /// Copy keeping only e_1..e_k.
  SymmetricProfile truncated(std::size_t k) const;
  friend bool operator==(const SymmetricProfile&, const SymmetricProfile&) = default;
};

struct PowerSumProfile {
  std::size_t n = 0;
  std::vector<Rational> p;  // p_1..p_k

  PowerSumProfile() = default;
  PowerSumProfile(std::size_t count, std::vector<Rational> sums);
  std::size_t k() const { return p.size(); }
  friend bool operator==(const PowerSumProfile&, const PowerSumProfile&) = default;
};

/// p_1..p_count from e_1..e_m, treating e_j = 0 for j > m. With m = n this is
/// valid for any count.
std::vector<Rational> newton_power_sums(std::span<const Rational> e, std::size_t count);

/// Integer form of the same recurrence: with D^j e_j integral for every j,
/// the roots D mu have integer power sums P_j = D^j p_j. p[0] = n.
struct ScaledPowerSums {
  Integer scale;
  std::vector<Integer> p;
};
ScaledPowerSums scaled_power_sums(std::span<const Rational> e, std::size_t n, std::size_t count);

/// Inverse direction: e_1..e_count from p_1..p_count.
std::vector<Rational> newton_elementary(std::span<const Rational> p, std::size_t count);

PowerSumProfile power_sums_from_elementary(const SymmetricProfile& profile);
SymmetricProfile elementary_from_power_sums(const PowerSumProfile& profile);

/// e_i = (-1)^i c_i for the monic polynomial x^n + c_1 x^{n-1} + ... + c_n.
SymmetricProfile profile_from_coefficients(std::size_t n, std::span<const Rational> c);

/// Top-k profile of a polynomial with nonzero leading coefficient
/// (normalized by it first).
SymmetricProfile profile_from_polynomial(const ExactPolynomial& p, std::size_t k);

/// e_1..e_k of an explicit root vector.
SymmetricProfile profile_from_roots(std::span<const Rational> roots, std::size_t k);

/// Monic polynomial with the given roots.
ExactPolynomial polynomial_from_roots(std::span<const Rational> roots);

/// sum_i q(mu_i) from the profile alone; requires deg q <= k.
Rational eval_poly_sum(const SymmetricProfile& profile, const ExactPolynomial& q);
Rational eval_poly_sum(const PowerSumProfile& sums, const ExactPolynomial& q);

/// e_i(a) == e_i(b) for all i <= k. Throws std::invalid_argument on mismatched n or k.
bool profiles_equal_up_to_k(const SymmetricProfile& a, const SymmetricProfile& b);

/// Monic polynomial whose roots are mu_i^t for the roots mu_i of p.
ExactPolynomial root_power_polynomial(const ExactPolynomial& p, unsigned t);

}  // namespace rootline
