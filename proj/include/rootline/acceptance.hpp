// The eleven end-to-end acceptance checks, shared by the acceptance test
// binary, the selftest subcommand and the repro scripts.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rootline/interlacing.hpp"
#include "rootline/io.hpp"

namespace rootline {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;  // one line
  Json detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 11;
constexpr std::uint64_t kDefaultSeed = 20240601;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

/// "[PASS] criterion 4: weak pair ... | summary"
std::string format_line(const CriterionResult& r);

// Seeded generators. Only raw engine output is used, reduced by modulo, so
// the corpus is the same on every standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);
/// Roots a/b with 1 <= b <= 16 and 0 <= a <= 10 b.
std::vector<Rational> random_root_vector(std::mt19937_64& rng, std::size_t n);
/// Support sizes 1..max_support, small integer vectors, probabilities with
/// denominators at most 12.
KSInstance random_ks_instance(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t max_support);

/// Every pair the generators produce at desk scale.
std::vector<LowerBoundPair> generated_pairs();

}  // namespace rootline
