#include "rootline/chebyshev.hpp"

#include <stdexcept>

namespace rootline {

ExactPolynomial cheb_poly(unsigned k) {
  ExactPolynomial prev = ExactPolynomial::constant(Rational(1));
  if (k == 0) return prev;
  ExactPolynomial cur = ExactPolynomial::identity();
  const ExactPolynomial two_x = ExactPolynomial::monomial(Rational(2), 1);
  for (unsigned i = 1; i < k; ++i) {
    ExactPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational cheb_eval(unsigned k, const Rational& x) {
  Rational prev(1);
  if (k == 0) return prev;
  Rational cur = x;
  for (unsigned i = 1; i < k; ++i) {
    Rational next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<RootInterval> cheb_shifted_roots(unsigned n, const Rational& angle) {
  if (n == 0) throw std::invalid_argument("cheb_shifted_roots: n must be positive");
  std::vector<RootInterval> out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    auto [lo, hi] = cos_pi_bounds((angle + 2 * Rational(i)) / Rational(n));
    out.push_back({lo, hi, 1});
  }
  return out;
}

Rational cheb_growth_lower_bound(unsigned k, const Rational& x) {
  if (x < 0) throw std::domain_error("cheb_growth_lower_bound: x must be nonnegative");
  const Rational target = cheb_eval(k, 1 + x);
  // T_k(1 + x) > (1 + sqrt(2x))^k / 2 strictly once x > 0, so enough bits
  // always squeeze the rounded-up value underneath it.
  for (unsigned bits = 64;; bits *= 2) {
    Rational b = pow(1 + sqrt_upper(2 * x, bits), k) / 2;
    if (b <= target) return b;
  }
}

}  // namespace rootline
