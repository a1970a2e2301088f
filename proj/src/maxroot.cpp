#include "rootline/maxroot.hpp"

#include <stdexcept>

#include "rootline/chebyshev.hpp"

namespace rootline {

namespace {

// ln n rounded up to a short dyadic keeps the loop's rationals small.
Rational log_upper_short(std::size_t n) {
  Rational hi = log_bounds(static_cast<std::uint64_t>(n)).second;
  return Rational(ceil(hi * pow2(20))) * pow2(-20);
}

// sum_j c_j P_j / s^j for s = D t, as the integer numerator over num(s)^k.
std::pair<Integer, Integer> chebyshev_sum(const std::vector<Rational>& c, const ScaledPowerSums& sums, const Rational& t) {
  const Rational s = t * Rational(sums.scale);
  const Integer num = numer(s), den = denom(s);
  Integer acc(0), pw(1);
  for (std::size_t j = c.size(); j-- > 0;) {
    acc = acc * den + numer(c[j]) * sums.p[j] * pw;
    if (j > 0) pw *= num;
  }
  return {acc, pw};
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::power_sum ? "power-sum" : "chebyshev-loop"; }

bool uses_power_sums(std::size_t k, std::size_t n) { return exp_at_most(k, n); }

Rational loop_shrink(std::size_t k, std::size_t n) {
  if (k == 0) throw std::invalid_argument("loop_shrink: k must be positive");
  Rational c = 20 * log_upper_short(n) / Rational(static_cast<unsigned long>(k));
  return 1 + c * c;
}

Rational alpha_factor(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw std::invalid_argument("alpha_factor: need 1 <= k <= n");
  if (uses_power_sums(k, n)) {
    return kth_root_bounds(Rational(static_cast<unsigned long>(n)), static_cast<unsigned>(k)).second;
  }
  Rational rho = loop_shrink(k, n);
  return rho * rho;
}

std::size_t iteration_bound(std::size_t k, std::size_t n) {
  if (n <= 1) return 2;
  auto [l_lo, l_hi] = log_bounds(static_cast<std::uint64_t>(n));
  Rational c_hi = 20 * l_hi / Rational(static_cast<unsigned long>(k));
  Rational denom_hi = log_bounds(Rational(1 + c_hi * c_hi)).second;
  Rational ratio_lo = l_lo / denom_hi;
  return static_cast<std::size_t>(ceil(1 + ratio_lo)) + 1;
}

Rational root_sum_test(const SymmetricProfile& prof, const Rational& t) { return root_sum_test(prof, t, prof.k()); }

Rational root_sum_test(const SymmetricProfile& prof, const Rational& t, std::size_t degree) {
  if (t <= 0) throw std::invalid_argument("root_sum_test: t must be positive");
  if (degree > prof.k() && prof.k() != prof.n) {
    throw std::invalid_argument("root_sum_test: degree exceeds the known statistics");
  }
  const auto k = static_cast<unsigned>(degree);
  auto [value, over] = chebyshev_sum(cheb_poly(k).coeffs(), scaled_power_sums(prof.e, prof.n, k), t);
  return Rational(value) / Rational(over);
}

ApproxResult power_sum_estimate(const SymmetricProfile& prof) {
  const std::size_t n = prof.n, k = prof.k();
  if (k < 1) throw std::invalid_argument("power_sum_estimate: need k >= 1");
  ApproxResult r;
  r.branch = Branch::power_sum;
  r.factor = kth_root_bounds(Rational(static_cast<unsigned long>(n)), static_cast<unsigned>(k)).second;
  Rational pk = newton_power_sums(prof.e, k).back();
  if (pk < 0) throw std::domain_error("power_sum_estimate: negative power sum contradicts nonnegative roots");
  auto [lo, hi] = kth_root_bounds(pk / Rational(static_cast<unsigned long>(n)), static_cast<unsigned>(k));
  r.estimate = lo;
  r.estimate_upper = hi;
  return r;
}

ApproxResult approx_max_root(const SymmetricProfile& prof) {
  const std::size_t n = prof.n, k = prof.k();
  if (k < 1) throw std::invalid_argument("approx_max_root: need k >= 1");
  ApproxResult r;
  const Rational& e1 = prof.e[0];
  if (e1 < 0) throw std::domain_error("approx_max_root: negative e_1 contradicts nonnegative roots");
  if (n == 1 || e1 == 0) {
    r.estimate = r.estimate_upper = e1;
    r.factor = 1;
    r.branch = uses_power_sums(k, n) ? Branch::power_sum : Branch::chebyshev_loop;
    return r;
  }
  if (uses_power_sums(k, n)) return power_sum_estimate(prof);
  r.branch = Branch::chebyshev_loop;
  r.factor = alpha_factor(k, n);
  const Rational rho = loop_shrink(k, n);
  const std::size_t cap = 10 * k * k + 100;
  const ExactPolynomial tk = cheb_poly(static_cast<unsigned>(k));
  const ScaledPowerSums sums = scaled_power_sums(prof.e, prof.n, k);
  Rational t = e1;
  for (std::size_t it = 1; it <= cap; ++it) {
    auto [value, over] = chebyshev_sum(tk.coeffs(), sums, t);
    if (value > over * static_cast<unsigned long>(n)) {
      r.estimate = r.estimate_upper = t;
      r.iterations = it;
      return r;
    }
    t /= rho;
  }
  throw std::runtime_error("approx_max_root: iteration cap exceeded; the profile cannot come from nonnegative roots");
}

}  // namespace rootline
