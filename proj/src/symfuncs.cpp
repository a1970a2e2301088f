#include "rootline/symfuncs.hpp"

#include <stdexcept>

namespace rootline {

SymmetricProfile::SymmetricProfile(std::size_t count, std::vector<Rational> elementary)
    : n(count), e(std::move(elementary)) {
  if (e.size() > n) throw std::invalid_argument("SymmetricProfile: k exceeds n");
}

SymmetricProfile SymmetricProfile::truncated(std::size_t k) const {
  if (k > e.size()) throw std::invalid_argument("SymmetricProfile::truncated: k exceeds available statistics");
  return SymmetricProfile(n, std::vector<Rational>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)));
}

PowerSumProfile::PowerSumProfile(std::size_t count, std::vector<Rational> sums) : n(count), p(std::move(sums)) {
  if (p.size() > n) throw std::invalid_argument("PowerSumProfile: k exceeds n");
}

ScaledPowerSums scaled_power_sums(std::span<const Rational> e, std::size_t n, std::size_t count) {
  const std::size_t m = e.size();
  Integer d(1);
  for (std::size_t j = 1; j <= m; ++j) {
    Integer left = denom(e[j - 1] * Rational(boost::multiprecision::pow(d, static_cast<unsigned>(j))));
    if (left != 1) d *= left;  // (d left)^j e_j is now integral
  }
  std::vector<Integer> big(m);
  Integer dj(1);
  for (std::size_t j = 1; j <= m; ++j) {
    dj *= d;
    big[j - 1] = numer(e[j - 1] * Rational(dj));
  }
  // p_i = sum_{j=1}^{i-1} (-1)^{j-1} e_j p_{i-j} + (-1)^{i-1} i e_i
  std::vector<Integer> p(count + 1);
  p[0] = Integer(static_cast<unsigned long>(n));
  for (std::size_t i = 1; i <= count; ++i) {
    Integer acc(0);
    const std::size_t top = std::min(i - 1, m);
    for (std::size_t j = 1; j <= top; ++j) {
      if (j % 2 == 1) acc += big[j - 1] * p[i - j]; else acc -= big[j - 1] * p[i - j];
    }
    if (i <= m) {
      Integer term = big[i - 1] * static_cast<unsigned long>(i);
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    p[i] = std::move(acc);
  }
  return {d, std::move(p)};
}

std::vector<Rational> newton_power_sums(std::span<const Rational> e, std::size_t count) {
  // n only enters through p_0
  ScaledPowerSums s = scaled_power_sums(e, 0, count);
  std::vector<Rational> p(count);
  Rational dj(1);
  for (std::size_t i = 1; i <= count; ++i) {
    dj *= Rational(s.scale);
    p[i - 1] = Rational(s.p[i]) / dj;
  }
  return p;
}

std::vector<Rational> newton_elementary(std::span<const Rational> p, std::size_t count) {
  // i e_i = sum_{j=1}^{i} (-1)^{j-1} e_{i-j} p_j, e_0 = 1
  if (count > p.size()) throw std::invalid_argument("newton_elementary: not enough power sums");
  std::vector<Rational> e(count);
  for (std::size_t i = 1; i <= count; ++i) {
    Rational acc(0);
    for (std::size_t j = 1; j <= i; ++j) {
      Rational prev = (i == j) ? Rational(1) : e[i - j - 1];
      Rational term = prev * p[j - 1];
      if (j % 2 == 1) acc += term; else acc -= term;
    }
    e[i - 1] = acc / Rational(static_cast<long>(i));
  }
  return e;
}

PowerSumProfile power_sums_from_elementary(const SymmetricProfile& profile) {
  return PowerSumProfile(profile.n, newton_power_sums(profile.e, profile.k()));
}

SymmetricProfile elementary_from_power_sums(const PowerSumProfile& profile) {
  return SymmetricProfile(profile.n, newton_elementary(profile.p, profile.k()));
}

SymmetricProfile profile_from_coefficients(std::size_t n, std::span<const Rational> c) {
  std::vector<Rational> e(c.begin(), c.end());
  for (std::size_t i = 0; i < e.size(); i += 2) e[i] = -e[i];  // e_i = (-1)^i c_i, i = index + 1
  return SymmetricProfile(n, std::move(e));
}

SymmetricProfile profile_from_polynomial(const ExactPolynomial& p, std::size_t k) {
  if (p.degree() < 0) throw std::invalid_argument("profile of the zero polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  if (k > n) throw std::invalid_argument("profile_from_polynomial: k exceeds the degree");
  std::vector<Rational> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = p.top(i + 1) / p.leading();
  return profile_from_coefficients(n, c);
}

ExactPolynomial polynomial_from_roots(std::span<const Rational> roots) {
  // ascending accumulation of prod (x - r)
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    c.push_back(Rational(0));
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return ExactPolynomial(std::move(c));
}

SymmetricProfile profile_from_roots(std::span<const Rational> roots, std::size_t k) {
  return profile_from_polynomial(polynomial_from_roots(roots), k);
}

Rational eval_poly_sum(const PowerSumProfile& sums, const ExactPolynomial& q) {
  if (q.degree() > static_cast<int>(sums.k())) {
    throw std::invalid_argument("eval_poly_sum: degree exceeds the number of known statistics");
  }
  if (q.is_zero()) return Rational(0);
  Rational total = q.coeffs()[0] * Rational(static_cast<unsigned long>(sums.n));
  for (std::size_t j = 1; j < q.coeffs().size(); ++j) total += q.coeffs()[j] * sums.p[j - 1];
  return total;
}

Rational eval_poly_sum(const SymmetricProfile& profile, const ExactPolynomial& q) {
  if (q.degree() > static_cast<int>(profile.k())) {
    throw std::invalid_argument("eval_poly_sum: degree exceeds the number of known statistics");
  }
  const auto needed = static_cast<std::size_t>(std::max(q.degree(), 0));
  return eval_poly_sum(PowerSumProfile(profile.n, newton_power_sums(profile.e, needed)), q);
}

bool profiles_equal_up_to_k(const SymmetricProfile& a, const SymmetricProfile& b) {
  if (a.n != b.n || a.k() != b.k()) throw std::invalid_argument("profiles_equal_up_to_k: mismatched n or k");
  return a.e == b.e;
}

ExactPolynomial root_power_polynomial(const ExactPolynomial& p, unsigned t) {
  if (p.degree() < 0) throw std::invalid_argument("root_power_polynomial of the zero polynomial");
  if (t == 0) throw std::invalid_argument("root_power_polynomial: t must be positive");
  const auto n = static_cast<std::size_t>(p.degree());
  SymmetricProfile full = profile_from_polynomial(p, n);
  std::vector<Rational> sums = newton_power_sums(full.e, n * t);
  std::vector<Rational> powered(n);
  for (std::size_t j = 1; j <= n; ++j) powered[j - 1] = sums[j * t - 1];
  std::vector<Rational> e = newton_elementary(powered, n);
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = Rational(1);
  for (std::size_t i = 1; i <= n; ++i) coeffs[n - i] = (i % 2 == 0) ? e[i - 1] : Rational(-e[i - 1]);
  return ExactPolynomial(std::move(coeffs));
}

}  // namespace rootline
