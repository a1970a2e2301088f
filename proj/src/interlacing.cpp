#include "rootline/interlacing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "rootline/symfuncs.hpp"

namespace rootline {

bool check_common_interlacing(const std::vector<ExactPolynomial>& polys) {
  if (polys.empty()) return true;
  const int d = polys.front().degree();
  std::vector<std::vector<IsolatedRoot>> sorted;
  for (const auto& p : polys) {
    if (p.degree() != d) throw std::invalid_argument("check_common_interlacing: degrees differ");
    if (p.is_zero() || p.leading() <= 0) throw std::invalid_argument("check_common_interlacing: leading coefficient must be positive");
    std::vector<IsolatedRoot> roots;
    for (auto& [root, mult] : isolated_roots(p))
      for (unsigned i = 0; i < mult; ++i) roots.push_back(root);
    if (static_cast<int>(roots.size()) != d) throw std::invalid_argument("check_common_interlacing: polynomial is not real-rooted");
    sorted.push_back(std::move(roots));
  }
  // a common interlacer needs max_i beta_j <= min_i beta_{j+1} for every j
  for (int j = 0; j + 1 < d; ++j)
    for (const auto& a : sorted)
      for (const auto& b : sorted)
        if (compare(a[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j + 1)]) == std::strong_ordering::greater)
          return false;
  return true;
}

namespace {

void check_probabilities(const std::vector<Rational>& probs, const char* what) {
  Rational total(0);
  for (const auto& p : probs) {
    if (p < 0) throw std::invalid_argument(std::string(what) + ": negative probability");
    total += p;
  }
  if (total != 1) throw std::invalid_argument(std::string(what) + ": probabilities sum to " + to_string(total) + ", not 1");
}

// Visits every k-subset of 0..m-1 in lexicographic order.
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > m) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    visit(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

ExactPolynomial rank_one_char_poly(std::size_t n, const std::vector<const VectorQ*>& vectors) {
  MatrixQ sum = MatrixQ::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const VectorQ* v : vectors) sum += (*v) * v->transpose();
  return char_poly(sum);
}

Rational gram_determinant(const std::vector<const VectorQ*>& vectors) {
  const auto k = static_cast<Eigen::Index>(vectors.size());
  MatrixQ g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i; j < k; ++j) g(i, j) = g(j, i) = vectors[static_cast<std::size_t>(i)]->dot(*vectors[static_cast<std::size_t>(j)]);
  return determinant<Rational>(g);
}

void check_prefix(const FamilySpec& spec, const std::vector<std::size_t>& prefix) {
  if (prefix.size() > spec.depth()) throw std::invalid_argument("prefix longer than the family depth");
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] >= spec.choices[i]) throw std::invalid_argument("prefix choice out of range");
}

class KsOracle final : public FamilyOracle {
 public:
  explicit KsOracle(KSInstance inst) : inst_(std::move(inst)) {
    inst_.validate();
    spec_.degree = inst_.n;
    for (const auto& s : inst_.supports) spec_.choices.push_back(s.size());
  }

  const FamilySpec& spec() const override { return spec_; }

  std::optional<std::vector<Rational>> top_coefficients(const std::vector<std::size_t>& prefix,
                                                        std::size_t k) const override {
    check_prefix(spec_, prefix);
    if (k > inst_.n) throw std::invalid_argument("ks_oracle: k exceeds n");
    Rational weight(1);
    for (std::size_t i = 0; i < prefix.size(); ++i) weight *= inst_.supports[i][prefix[i]].probability;
    if (weight == 0) return std::nullopt;
    const std::size_t m = inst_.supports.size();
    std::vector<Rational> out(k + 1);
    out[0] = weight;
    for (std::size_t j = 1; j <= k; ++j) {
      // E sigma_j(sum r_i r_i^T) = sum over j-subsets T of E det Gram(r_T)
      Rational total(0);
      for_each_subset(m, j, [&](const std::vector<std::size_t>& subset) {
        std::vector<const VectorQ*> chosen(subset.size());
        std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t pos, const Rational& prob) {
          if (prob == 0) return;
          if (pos == subset.size()) {
            total += prob * gram_determinant(chosen);
            return;
          }
          const std::size_t i = subset[pos];
          if (i < prefix.size()) {
            chosen[pos] = &inst_.supports[i][prefix[i]].vector;
            expand(pos + 1, prob);
            return;
          }
          for (const auto& c : inst_.supports[i]) {
            chosen[pos] = &c.vector;
            expand(pos + 1, prob * c.probability);
          }
        };
        expand(0, Rational(1));
      });
      out[j] = (j % 2 == 0 ? total : Rational(-total)) * weight;
    }
    return out;
  }

  ExactPolynomial leaf_polynomial(const std::vector<std::size_t>& assignment) const override {
    if (assignment.size() != spec_.depth()) throw std::invalid_argument("leaf_polynomial: incomplete assignment");
    check_prefix(spec_, assignment);
    Rational weight(1);
    std::vector<const VectorQ*> vectors;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      weight *= inst_.supports[i][assignment[i]].probability;
      vectors.push_back(&inst_.supports[i][assignment[i]].vector);
    }
    if (weight == 0) return {};
    return rank_one_char_poly(inst_.n, vectors) * weight;
  }

 private:
  KSInstance inst_;
  FamilySpec spec_;
};

class SrOracle final : public FamilyOracle {
 public:
  explicit SrOracle(SRInstance inst) : inst_(std::move(inst)) {
    inst_.validate();
    spec_.degree = inst_.n;
    spec_.choices.assign(inst_.m, 2);
  }

  const FamilySpec& spec() const override { return spec_; }

  std::optional<std::vector<Rational>> top_coefficients(const std::vector<std::size_t>& prefix,
                                                        std::size_t k) const override {
    check_prefix(spec_, prefix);
    if (k > inst_.n) throw std::invalid_argument("sr_oracle: k exceeds n");
    // restrict the table to sets consistent with the prefix, then take
    // superset sums: h(T) = P[T subset of S, S consistent]
    std::vector<Rational> h = restricted(prefix);
    const std::size_t m = inst_.m;
    for (std::size_t bit = 0; bit < m; ++bit)
      for (std::size_t mask = 0; mask < h.size(); ++mask)
        if (!(mask >> bit & 1u)) h[mask] += h[mask | (std::size_t{1} << bit)];
    if (h[0] == 0) return std::nullopt;
    std::vector<Rational> out(k + 1);
    out[0] = h[0];
    for (std::size_t j = 1; j <= k; ++j) {
      Rational total(0);
      for_each_subset(m, j, [&](const std::vector<std::size_t>& subset) {
        std::size_t mask = 0;
        std::vector<const VectorQ*> chosen;
        for (auto i : subset) {
          mask |= std::size_t{1} << i;
          chosen.push_back(&inst_.vectors[i]);
        }
        if (h[mask] != 0) total += h[mask] * gram_determinant(chosen);
      });
      out[j] = j % 2 == 0 ? total : Rational(-total);
    }
    return out;
  }

  ExactPolynomial leaf_polynomial(const std::vector<std::size_t>& assignment) const override {
    if (assignment.size() != spec_.depth()) throw std::invalid_argument("leaf_polynomial: incomplete assignment");
    check_prefix(spec_, assignment);
    std::size_t mask = 0;
    std::vector<const VectorQ*> vectors;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i] == 1) {
        mask |= std::size_t{1} << i;
        vectors.push_back(&inst_.vectors[i]);
      }
    if (inst_.table[mask] == 0) return {};
    return rank_one_char_poly(inst_.n, vectors) * inst_.table[mask];
  }

 private:
  std::vector<Rational> restricted(const std::vector<std::size_t>& prefix) const {
    std::vector<Rational> h = inst_.table;
    for (std::size_t mask = 0; mask < h.size(); ++mask)
      for (std::size_t i = 0; i < prefix.size(); ++i)
        if (((mask >> i) & 1u) != prefix[i]) {
          h[mask] = 0;
          break;
        }
    return h;
  }

  SRInstance inst_;
  FamilySpec spec_;
};

}  // namespace

void KSInstance::validate() const {
  if (n == 0) throw std::invalid_argument("KSInstance: n must be positive");
  if (supports.empty()) throw std::invalid_argument("KSInstance: no random vectors");
  for (const auto& s : supports) {
    if (s.empty()) throw std::invalid_argument("KSInstance: empty support");
    std::vector<Rational> probs;
    for (const auto& c : s) {
      if (static_cast<std::size_t>(c.vector.size()) != n) throw std::invalid_argument("KSInstance: vector length differs from n");
      probs.push_back(c.probability);
    }
    check_probabilities(probs, "KSInstance");
  }
}

void SRInstance::validate() const {
  if (n == 0) throw std::invalid_argument("SRInstance: n must be positive");
  if (m == 0 || m > 20) throw std::invalid_argument("SRInstance: m must be in [1, 20]");
  if (table.size() != (std::size_t{1} << m)) throw std::invalid_argument("SRInstance: table must have 2^m entries");
  if (vectors.size() != m) throw std::invalid_argument("SRInstance: need one vector per element");
  for (const auto& v : vectors)
    if (static_cast<std::size_t>(v.size()) != n) throw std::invalid_argument("SRInstance: vector length differs from n");
  check_probabilities(table, "SRInstance");
}

bool SRInstance::homogeneous() const {
  int size = -1;
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] == 0) continue;
    const int s = __builtin_popcountll(mask);
    if (size == -1) size = s;
    else if (size != s) return false;
  }
  return true;
}

std::unique_ptr<FamilyOracle> ks_oracle(KSInstance inst) { return std::make_unique<KsOracle>(std::move(inst)); }
std::unique_ptr<FamilyOracle> sr_oracle(SRInstance inst) { return std::make_unique<SrOracle>(std::move(inst)); }

ExactPolynomial ks_expected_char_poly(const KSInstance& inst, const std::vector<std::size_t>& prefix) {
  inst.validate();
  const std::size_t m = inst.supports.size();
  ExactPolynomial total;
  std::vector<const VectorQ*> chosen(m);
  std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t i, const Rational& prob) {
    if (prob == 0) return;
    if (i == m) {
      total += rank_one_char_poly(inst.n, chosen) * prob;
      return;
    }
    if (i < prefix.size()) {
      const auto& c = inst.supports[i][prefix[i]];
      chosen[i] = &c.vector;
      walk(i + 1, prob * c.probability);
      return;
    }
    for (const auto& c : inst.supports[i]) {
      chosen[i] = &c.vector;
      walk(i + 1, prob * c.probability);
    }
  };
  walk(0, Rational(1));
  return total;
}

ExactPolynomial sr_expected_char_poly(const SRInstance& inst, const std::vector<std::size_t>& prefix) {
  inst.validate();
  ExactPolynomial total;
  for (std::size_t mask = 0; mask < inst.table.size(); ++mask) {
    if (inst.table[mask] == 0) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < prefix.size() && consistent; ++i) consistent = ((mask >> i) & 1u) == prefix[i];
    if (!consistent) continue;
    std::vector<const VectorQ*> vectors;
    for (std::size_t i = 0; i < inst.m; ++i)
      if (mask >> i & 1u) vectors.push_back(&inst.vectors[i]);
    total += rank_one_char_poly(inst.n, vectors) * inst.table[mask];
  }
  return total;
}

namespace {

std::size_t ceil_cube_root(std::size_t m) {
  std::size_t r = 1;
  while (r * r * r < m) ++r;
  return r;
}

ExactPolynomial from_top(const std::vector<Rational>& top) {
  std::vector<Rational> c(top.rbegin(), top.rend());
  return ExactPolynomial(std::move(c));
}

// Decides a <= factor * b for roots with b > 0 by refinement.
bool at_most_times(IsolatedRoot a, IsolatedRoot b, const Rational& factor) {
  const Rational floor_width = pow2(-400);
  for (;;) {
    if (a.hi() <= factor * b.lo()) return true;
    if (a.lo() > factor * b.hi()) return false;
    if (a.hi() - a.lo() < floor_width && b.hi() - b.lo() < floor_width) return false;
    a.refine();
    b.refine();
  }
}

struct Candidate {
  std::vector<std::size_t> choice;
  std::vector<Rational> coeffs;
};

}  // namespace

RoundingResult round_family(const FamilyOracle& oracle, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("round_family: epsilon must be positive");
  const FamilySpec& spec = oracle.spec();
  const std::size_t m = spec.depth(), n = spec.degree;
  if (m == 0) throw std::invalid_argument("round_family: empty family");
  RoundingResult result;
  const std::size_t group = ceil_cube_root(m);
  result.group_size = group;

  // k = ceil(20 ln n M sqrt(2 / eps)), capped at n
  const Rational ln_up = n <= 1 ? Rational(0) : log_bounds(static_cast<std::uint64_t>(n)).second;
  const Rational want = 20 * ln_up * Rational(static_cast<unsigned long>(group)) * sqrt_upper(2 / epsilon);
  std::size_t k = n;
  if (want < Rational(static_cast<unsigned long>(n))) k = std::max<std::size_t>(1, static_cast<std::size_t>(ceil(want)));
  result.k_requested = k;

  const std::size_t steps = (m + group - 1) / group;
  const Rational per_step = 1 + epsilon / Rational(static_cast<unsigned long>(2 * group * group));
  result.a_priori_factor = pow(per_step, static_cast<unsigned>(steps));

  auto root_coeffs = oracle.top_coefficients({}, n);
  if (!root_coeffs) throw std::invalid_argument("round_family: the family polynomial is identically zero");
  const ExactPolynomial root_poly = from_top(*root_coeffs);

  std::vector<std::size_t> prefix;
  for (std::size_t first = 0; first < m; first += group) {
    const std::size_t count = std::min(group, m - first);
    auto parent = oracle.top_coefficients(prefix, k);
    RoundingStep step;
    step.first = first;
    step.count = count;
    step.k_used = k;

    // all extensions of this group, lexicographic
    std::vector<Candidate> candidates;
    std::vector<Rational> sum(k + 1, Rational(0));
    std::vector<std::size_t> ext(count, 0);
    for (;;) {
      std::vector<std::size_t> full = prefix;
      full.insert(full.end(), ext.begin(), ext.end());
      if (auto c = oracle.top_coefficients(full, k)) {
        for (std::size_t j = 0; j <= k; ++j) sum[j] += (*c)[j];
        candidates.push_back({ext, std::move(*c)});
      }
      std::size_t pos = count;
      while (pos > 0 && ext[pos - 1] + 1 == spec.choices[first + pos - 1]) ext[--pos] = 0;
      if (pos == 0) break;
      ++ext[pos - 1];
    }
    const std::vector<Rational> expect = parent ? *parent : std::vector<Rational>(k + 1, Rational(0));
    if (sum != expect) {
      std::size_t j = 0;
      while (sum[j] == expect[j]) ++j;
      throw std::runtime_error("round_family: oracle inconsistent at coordinates " + std::to_string(first) + ".." +
                               std::to_string(first + count - 1) + ", coefficient " + std::to_string(j) + ": children sum to " +
                               to_string(sum[j]) + ", parent reports " + to_string(expect[j]));
    }
    if (candidates.empty()) throw std::runtime_error("round_family: every extension is identically zero");
    step.candidates = candidates.size();

    std::size_t best = 0;
    if (k == n) {
      // the coefficients are the whole polynomial: compare exact largest roots
      step.exact_estimates = true;
      std::optional<IsolatedRoot> best_root;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        auto r = largest_root(from_top(candidates[c].coeffs));
        if (!r) throw std::domain_error("round_family: candidate polynomial has no real root");
        if (!best_root || compare(*r, *best_root) == std::strong_ordering::less) {
          best_root = *r;
          best = c;
        }
      }
      best_root->refine_to(pow2(-64));
      step.estimate = best_root->hi();
      step.branch = Branch::power_sum;
    } else {
      std::optional<ApproxResult> best_est;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& co = candidates[c].coeffs;
        std::vector<Rational> normalized;
        for (std::size_t j = 1; j <= k; ++j) normalized.push_back(co[j] / co[0]);
        ApproxResult est = approx_max_root(profile_from_coefficients(n, normalized));
        if (!best_est || est.estimate < best_est->estimate) {
          best_est = est;
          best = c;
        }
      }
      step.estimate = best_est->estimate;
      step.branch = best_est->branch;
    }
    step.chosen = candidates[best].choice;
    prefix.insert(prefix.end(), step.chosen.begin(), step.chosen.end());
    result.steps.push_back(std::move(step));
  }
  result.assignment = prefix;

  const ExactPolynomial leaf = oracle.leaf_polynomial(prefix);
  if (leaf.is_zero()) throw std::runtime_error("round_family: selected leaf is identically zero");
  IsolatedRoot leaf_top = *largest_root(leaf);
  IsolatedRoot root_top = *largest_root(root_poly);
  result.within_bound = compare(root_top, Rational(0)) == std::strong_ordering::greater
                            ? at_most_times(leaf_top, root_top, 1 + epsilon)
                            : compare(leaf_top, Rational(0)) != std::strong_ordering::greater;
  leaf_top.refine_to(pow2(-64));
  root_top.refine_to(pow2(-64));
  result.leaf_max = leaf_top.interval();
  result.root_max = root_top.interval();
  if (root_top.lo() > 0) result.certified_ratio_upper = leaf_top.hi() / root_top.lo();
  return result;
}

ExhaustiveResult exhaustive_leaf_minimum(const FamilyOracle& oracle) {
  const FamilySpec& spec = oracle.spec();
  ExhaustiveResult out;
  std::vector<std::size_t> a(spec.depth(), 0);
  std::optional<IsolatedRoot> best;
  for (;;) {
    ++out.leaves;
    ExactPolynomial leaf = oracle.leaf_polynomial(a);
    if (!leaf.is_zero()) {
      IsolatedRoot r = *largest_root(leaf);
      if (!best || compare(r, *best) == std::strong_ordering::less) {
        best = r;
        out.best = a;
      }
    }
    std::size_t pos = a.size();
    while (pos > 0 && a[pos - 1] + 1 == spec.choices[pos - 1]) a[--pos] = 0;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  if (!best) throw std::runtime_error("exhaustive_leaf_minimum: every leaf is identically zero");
  best->refine_to(pow2(-64));
  out.best_max = best->interval();
  return out;
}

}  // namespace rootline
