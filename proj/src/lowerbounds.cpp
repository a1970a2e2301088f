#include "rootline/lowerbounds.hpp"

#include <stdexcept>

#include "rootline/chebyshev.hpp"
#include "rootline/interlacing.hpp"
#include "rootline/symfuncs.hpp"

namespace rootline {

namespace {

const Rational& generation_precision() {
  static const Rational w = pow2(-64);
  return w;
}

IsolatedRoot top_root(const ExactPolynomial& p, const char* what) {
  auto r = largest_root(p);
  if (!r) throw std::domain_error(std::string(what) + " has no real root");
  return *r;
}

// lo(num) / hi(den) once both are refined to the given width.
Rational ratio_lower_bound(IsolatedRoot num, IsolatedRoot den, const Rational& width) {
  num.refine_to(width);
  den.refine_to(width);
  if (den.hi() <= 0) throw std::domain_error("largest root of the smaller polynomial is not positive");
  return num.lo() / den.hi();
}

// Decides num >= target * den for positive den by refining; gives up (false)
// once the intervals are narrower than 2^-400.
bool ratio_at_least(IsolatedRoot num, IsolatedRoot den, const Rational& target) {
  const Rational floor_width = pow2(-400);
  for (;;) {
    if (num.lo() >= target * den.hi()) return true;
    if (num.hi() < target * den.lo()) return false;
    if (num.hi() - num.lo() < floor_width && den.hi() - den.lo() < floor_width) return false;
    num.refine();
    den.refine();
  }
}

ExactPolynomial x_minus(const Rational& c) { return ExactPolynomial::linear_factor(c); }

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::weak: return "weak";
    case Provenance::girth: return "girth";
    case Provenance::boosted: return "boosted";
    case Provenance::noisy: return "noisy";
  }
  return "weak";
}

Provenance parse_provenance(const std::string& text) {
  for (auto p : {Provenance::weak, Provenance::girth, Provenance::boosted, Provenance::noisy})
    if (to_string(p) == text) return p;
  throw std::invalid_argument("unknown provenance '" + text + "'");
}

LowerBoundPair weak_pair(std::size_t n) {
  if (n < 2) throw std::invalid_argument("weak_pair: n must be at least 2");
  const ExactPolynomial shifted = compose(cheb_poly(static_cast<unsigned>(n)), x_minus(Rational(1)));
  const ExactPolynomial one = ExactPolynomial::constant(Rational(1));
  LowerBoundPair pair;
  pair.p = monic(shifted + one);
  pair.q = monic(shifted - one);
  pair.k = n - 1;
  pair.provenance = Provenance::weak;
  if (matched_top_coefficients(pair.p, pair.q) < pair.k) throw std::logic_error("weak_pair: coefficients disagree");
  // largest roots are 1 + cos(pi / n) and exactly 2
  const Rational cos_hi = cos_pi_bounds(Rational(1) / Rational(static_cast<unsigned long>(n))).second;
  pair.ratio_lower = 2 / (1 + cos_hi);
  return pair;
}

LowerBoundPair girth_pair(const Graph& g, unsigned t, GirthPairInfo* info) {
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("girth_pair: power must be even and at least 2");
  if (!is_bipartite(g)) throw std::invalid_argument("girth_pair: graph must be bipartite");
  const auto gth = girth(g);
  if (!gth) throw std::invalid_argument("girth_pair: graph has no cycle");
  const std::size_t k = (*gth - 1) / t;
  if (k < 1) throw std::invalid_argument("girth_pair: power exceeds girth - 1; no statistics match");

  SigningSearchResult best = best_signing_search(g);
  const ExactPolynomial plus = char_poly(signed_adjacency(g, all_positive(g)));
  LowerBoundPair pair;
  pair.p = root_power_polynomial(best.char_poly, t);
  pair.q = root_power_polynomial(plus, t);
  pair.k = k;
  pair.provenance = Provenance::girth;
  if (!profiles_equal_up_to_k(profile_from_polynomial(pair.p, k), profile_from_polynomial(pair.q, k))) {
    throw std::logic_error("girth_pair: trace powers below the girth disagree");
  }
  pair.ratio_lower = ratio_lower_bound(top_root(pair.q, "q"), top_root(pair.p, "p"), generation_precision());

  if (info) {
    info->girth = *gth;
    info->best = best.signing;
    info->lambda_best = best.lambda_max;
    IsolatedRoot lp = top_root(plus, "adjacency");
    lp.refine_to(pow2(-40));
    info->lambda_plus = lp.interval();
    const std::size_t d = g.max_degree();
    if (d >= 2) {
      info->degree_bound = pow(avg_degree_bound(g), t) /
                           pow(Rational(4 * static_cast<long>(d - 1)), t / 2);
    }
  }
  return pair;
}

LowerBoundPair boosted_pair(const LowerBoundPair& base, unsigned t, BoostInfo* info) {
  if (t < 1) throw std::invalid_argument("boosted_pair: t must be positive");
  if (base.p.degree() != base.q.degree() || base.p.degree() < 1) {
    throw std::invalid_argument("boosted_pair: base polynomials must have equal positive degree");
  }
  if (!is_real_rooted(base.p) || !is_real_rooted(base.q)) throw std::domain_error("boosted_pair: base is not real-rooted");

  auto roots_p = isolated_roots(base.p), roots_q = isolated_roots(base.q);
  const Rational low = std::min(roots_p.front().first.lo(), roots_q.front().first.lo());
  const IsolatedRoot& q_top = roots_q.back().first;
  const Rational high = q_top.hi();
  if (!(low < high)) throw std::domain_error("boosted_pair: degenerate root range");
  // x -> a x + b sends [low, high] onto [-1, 1]
  const Rational a = 2 / (high - low);
  const Rational b = -1 - a * low;
  const Rational half_preimage = (Rational(1) / 2 - b) / a;
  if (compare(roots_p.back().first, half_preimage) == std::strong_ordering::greater) {
    throw std::domain_error("boosted_pair: rescaled smaller largest root exceeds 1/2; the base ratio is too small");
  }

  const ExactPolynomial cheb = cheb_poly(t);
  auto lift = [&](const ExactPolynomial& base_poly) {
    ExactPolynomial composed = compose(shift_scale(base_poly, a, b), cheb);
    return monic(shift_scale(composed, Rational(1), Rational(1)));
  };
  LowerBoundPair pair;
  pair.p = lift(base.p);
  pair.q = lift(base.q);
  pair.k = matched_top_coefficients(pair.p, pair.q);
  pair.provenance = Provenance::boosted;
  IsolatedRoot p_top = top_root(pair.p, "p"), q_top_out = top_root(pair.q, "q");
  pair.ratio_lower = ratio_lower_bound(q_top_out, p_top, generation_precision());

  if (info) {
    info->scale = a;
    info->shift = b;
    const Rational angle = Rational(1) / Rational(3 * static_cast<long>(t));
    info->formula_ratio = 2 / (1 + cos_pi_bounds(angle).second);
    // 1 + cos(pi / 3t) is the largest root of T_{3t}(x - 1) + 1
    ExactPolynomial marker = compose(cheb_poly(3 * t), x_minus(Rational(1))) + ExactPolynomial::constant(Rational(1));
    info->meets_formula = compare(q_top_out, Rational(2)) == std::strong_ordering::equal &&
                          compare(p_top, top_root(marker, "marker")) != std::strong_ordering::greater;
  }
  return pair;
}

NoisyPair noisy_pair(std::size_t k, std::size_t n) {
  if (k <= 1) throw std::invalid_argument("noisy_pair: k must exceed 1");
  if (2 * k > n) throw std::invalid_argument("noisy_pair: need 2k <= n");
  const auto kk = static_cast<unsigned>(k);
  const ExactPolynomial y({Rational(3, 2), Rational(-1)});  // 3/2 - x
  const ExactPolynomial tk = cheb_poly(kk), t2k = cheb_poly(2 * kk);
  const ExactPolynomial one = ExactPolynomial::constant(Rational(1));

  NoiseCertificate cert;
  cert.identity_holds = Rational(2) * tk * tk - t2k == one;

  const ExactPolynomial tk_y = compose(tk, y);
  const ExactPolynomial pad = ExactPolynomial::monomial(Rational(1), n - 2 * k);
  const ExactPolynomial r = monic(Rational(2) * tk_y * tk_y) * pad;
  const ExactPolynomial s = monic(compose(t2k, y)) * pad;

  for (std::size_t i = 0; i <= n; ++i) {
    if (r.coefficient(i) != s.coefficient(i)) {
      ++cert.differing_count;
      cert.differing_degree = i;
    }
  }
  if (cert.differing_count == 1) cert.coefficient_ratio = r.coefficient(cert.differing_degree) / s.coefficient(cert.differing_degree);
  cert.coefficient_bound = 1 + Rational(4) / pow2(static_cast<int>(2 * k));
  cert.coefficient_within_bound = cert.differing_count == 1 && cert.coefficient_ratio <= cert.coefficient_bound;

  cert.roots_r = real_roots(r, generation_precision());
  cert.roots_s = real_roots(s, generation_precision());
  IsolatedRoot r_top = top_root(r, "r"), s_top = top_root(s, "s");
  cert.root_ratio_lower = ratio_lower_bound(s_top, r_top, generation_precision());
  cert.root_ratio_target = 1 + Rational(1) / Rational(2 * static_cast<long>(k * k));
  cert.meets_target = ratio_at_least(s_top, r_top, cert.root_ratio_target);
  cert.common_interlacing = check_common_interlacing({r, s});

  NoisyPair out;
  out.pair.p = r;
  out.pair.q = s;
  out.pair.k = matched_top_coefficients(r, s);
  out.pair.ratio_lower = cert.root_ratio_lower;
  out.pair.provenance = Provenance::noisy;
  out.certificate = std::move(cert);
  return out;
}

PairReport verify_pair(const LowerBoundPair& pair) {
  PairReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failures.push_back(std::move(why));
  };
  if (pair.p.is_zero() || pair.q.is_zero()) {
    fail("zero polynomial");
    return report;
  }
  if (pair.p.degree() != pair.q.degree()) {
    fail("degrees differ: " + std::to_string(pair.p.degree()) + " vs " + std::to_string(pair.q.degree()));
    return report;
  }
  report.degree = static_cast<std::size_t>(pair.p.degree());
  if (pair.p.leading() != 1) fail("p is not monic");
  if (pair.q.leading() != 1) fail("q is not monic");
  if (pair.k > report.degree) fail("k exceeds the degree");
  report.matched = matched_top_coefficients(pair.p, pair.q);
  if (report.matched < pair.k) {
    report.first_mismatch = report.matched + 1;
    fail("coefficient of x^" + std::to_string(report.degree - report.matched - 1) + " (index " +
         std::to_string(report.matched + 1) + " from the top) differs");
  }
  report.p_real_rooted = is_real_rooted(pair.p);
  report.q_real_rooted = is_real_rooted(pair.q);
  if (!report.p_real_rooted) fail("p is not real-rooted");
  if (!report.q_real_rooted) fail("q is not real-rooted");
  if (!report.p_real_rooted || !report.q_real_rooted) return report;

  IsolatedRoot p_top = top_root(pair.p, "p"), q_top = top_root(pair.q, "q");
  if (compare(p_top, Rational(0)) != std::strong_ordering::greater) {
    fail("largest root of p is not positive");
    return report;
  }
  const bool ratio_ok = ratio_at_least(q_top, p_top, pair.ratio_lower);
  p_top.refine_to(pow2(-80));
  q_top.refine_to(pow2(-80));
  report.p_max = p_top.interval();
  report.q_max = q_top.interval();
  report.certified_ratio = q_top.lo() / p_top.hi();
  if (!ratio_ok) fail("largest-root ratio is below ratio_lower " + to_string(pair.ratio_lower));

  if (pair.provenance == Provenance::noisy) {
    report.common_interlacing = check_common_interlacing({pair.p, pair.q});
    if (!*report.common_interlacing) fail("no common interlacing");
  }
  return report;
}

}  // namespace rootline
