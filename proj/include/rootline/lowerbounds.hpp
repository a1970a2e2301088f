// Coefficient-matched polynomial pairs whose largest roots differ by a
// certified factor, and a verifier that re-checks every claim from scratch.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootline/graphs.hpp"
#include "rootline/roots.hpp"

namespace rootline {

enum class Provenance { weak, girth, boosted, noisy };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

/// p and q monic of equal degree, agreeing on the coefficients of
/// x^{n-1}..x^{n-k}, with ratio_lower <= lambda_max(q) / lambda_max(p).
struct LowerBoundPair {
  ExactPolynomial p, q;
  std::size_t k = 0;
  Rational ratio_lower;
  Provenance provenance = Provenance::weak;
};

/// Roots of T_n(x - 1) + 1 against T_n(x - 1) - 1, matched up to n - 1.
LowerBoundPair weak_pair(std::size_t n);

struct GirthPairInfo {
  std::size_t girth = 0;
  Signing best;
  RootInterval lambda_plus;   // lambda_max of the all-+1 signing
  RootInterval lambda_best;   // lambda_max of the best signing
  Rational degree_bound;      // deg_avg^t / (4 (deg_max - 1))^{t/2}
};

/// t-th powers of the eigenvalues of the best signing (p) and of the all-+1
/// signing (q) of a bipartite graph; k = floor((girth - 1) / t).
LowerBoundPair girth_pair(const Graph& g, unsigned t, GirthPairInfo* info = nullptr);

struct BoostInfo {
  Rational scale, shift;     // base roots mapped by x -> scale * x + shift into [-1, 1]
  Rational formula_ratio;    // lower bound on 2 / (1 + cos(pi / 3t))
  bool meets_formula = false;
};

/// Maps the base roots affinely into [-1, 1] with the larger largest root
/// at the top, composes both polynomials with T_t and shifts the roots by
/// +1. Requires the smaller largest root to land at or below 1/2; throws
/// std::domain_error otherwise.
LowerBoundPair boosted_pair(const LowerBoundPair& base, unsigned t, BoostInfo* info = nullptr);

struct NoiseCertificate {
  bool identity_holds = false;       // 2 T_k^2 - T_{2k} == 1
  std::size_t differing_degree = 0;  // the one coefficient where r and s differ
  std::size_t differing_count = 0;
  Rational coefficient_ratio;        // r / s at that coefficient
  Rational coefficient_bound;        // 1 + 4 / 2^{2k}
  bool coefficient_within_bound = false;
  Rational root_ratio_lower;         // certified lower bound on lambda_max(s) / lambda_max(r)
  Rational root_ratio_target;        // 1 + 1 / (2 k^2)
  bool meets_target = false;
  std::vector<RootInterval> roots_r, roots_s;
  bool common_interlacing = false;
};

struct NoisyPair {
  LowerBoundPair pair;  // p = r, q = s (s has the larger largest root)
  NoiseCertificate certificate;
};

/// r = 2 T_k(3/2 - x)^2 and s = T_{2k}(3/2 - x), monic, times x^{n - 2k}.
NoisyPair noisy_pair(std::size_t k, std::size_t n);

struct PairReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t degree = 0;
  std::size_t matched = 0;
  std::optional<std::size_t> first_mismatch;  // i with top(i) differing, i <= k
  bool p_real_rooted = false, q_real_rooted = false;
  RootInterval p_max, q_max;
  Rational certified_ratio;  // lo(q_max) / hi(p_max)
  std::optional<bool> common_interlacing;  // checked for noisy pairs
};

/// Re-derives coefficient agreement, real-rootedness and the ratio bound.
PairReport verify_pair(const LowerBoundPair& pair);

}  // namespace rootline
