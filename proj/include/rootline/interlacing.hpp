// Interlacing families: the common-interlacing test, coefficient oracles for
// two concrete families and the grouped rounding procedure.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootline/matrix.hpp"
#include "rootline/maxroot.hpp"
#include "rootline/roots.hpp"

namespace rootline {

/// True iff the polynomials (same degree, positive leading coefficient) have
/// a common interlacer: with roots sorted ascending, the j-th roots all lie
/// at or below every (j+1)-th root. Throws std::invalid_argument on a
/// non-real-rooted member or mismatched degrees.
bool check_common_interlacing(const std::vector<ExactPolynomial>& polys);

/// Choice sets S_1..S_m given by their sizes; choices are 0..size-1.
struct FamilySpec {
  std::vector<std::size_t> choices;
  std::size_t degree = 0;
  std::size_t depth() const { return choices.size(); }
};

/// Top coefficients of f_{s_1..s_l} for a prefix assignment: c_0..c_k with c_0
/// the leading coefficient (the total weight of the prefix). nullopt means
/// the polynomial is identically zero.
class FamilyOracle {
 public:
  virtual ~FamilyOracle() = default;
  virtual const FamilySpec& spec() const = 0;
  virtual std::optional<std::vector<Rational>> top_coefficients(const std::vector<std::size_t>& prefix,
                                                                std::size_t k) const = 0;
  /// The whole polynomial of a complete assignment (used for certification).
  virtual ExactPolynomial leaf_polynomial(const std::vector<std::size_t>& assignment) const = 0;
};

struct KSChoice {
  VectorQ vector;
  Rational probability;
};

/// Independent random vectors r_1..r_m with explicit finite supports.
struct KSInstance {
  std::size_t n = 0;
  std::vector<std::vector<KSChoice>> supports;
  void validate() const;
};

/// Subset distribution on [m] as a dense table indexed by bitmask, with
/// vectors v_1..v_m. Choice 0 for coordinate i means i is left out, 1 that
/// it is taken.
struct SRInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Rational> table;  // size 2^m
  std::vector<VectorQ> vectors;
  void validate() const;
  bool homogeneous() const;
};

std::unique_ptr<FamilyOracle> ks_oracle(KSInstance inst);
std::unique_ptr<FamilyOracle> sr_oracle(SRInstance inst);

/// E det(xI - sum_i r_i r_i^T) by enumerating every outcome.
ExactPolynomial ks_expected_char_poly(const KSInstance& inst, const std::vector<std::size_t>& prefix = {});

/// sum_S mu(S) det(xI - sum_{i in S} v_i v_i^T) restricted to sets consistent
/// with the prefix, unnormalized.
ExactPolynomial sr_expected_char_poly(const SRInstance& inst, const std::vector<std::size_t>& prefix = {});

struct RoundingStep {
  std::size_t first = 0, count = 0;      // coordinates fixed in this step
  std::vector<std::size_t> chosen;       // their values
  std::size_t candidates = 0;            // extensions that were not identically zero
  std::size_t k_used = 0;
  Branch branch = Branch::power_sum;
  Rational estimate;                     // estimate for the chosen extension
  bool exact_estimates = false;          // estimates were exact largest roots
};

struct RoundingResult {
  std::vector<std::size_t> assignment;
  std::size_t group_size = 0;             // M
  std::size_t k_requested = 0;
  Rational a_priori_factor;               // (1 + eps / (2 M^2))^{steps}
  RootInterval root_max;                  // lambda_max(f_empty), normalized
  RootInterval leaf_max;                  // lambda_max(f_assignment), normalized
  Rational certified_ratio_upper;         // hi(leaf) / lo(root)
  bool within_bound = false;              // leaf <= (1 + eps) root, decided exactly
  std::vector<RoundingStep> steps;
};

/// Rounds the family in groups of M = ceil(m^{1/3}) coordinates, keeping the
/// extension with the smallest estimated largest root (lexicographic ties).
/// Throws std::runtime_error if the oracle is inconsistent under refinement.
RoundingResult round_family(const FamilyOracle& oracle, const Rational& epsilon);

/// Smallest lambda_max over all leaves, for cross-checks.
struct ExhaustiveResult {
  std::vector<std::size_t> best;
  RootInterval best_max;
  std::size_t leaves = 0;
};
ExhaustiveResult exhaustive_leaf_minimum(const FamilyOracle& oracle);

}  // namespace rootline
