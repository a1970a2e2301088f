// Exact rational scalar shared by every module, plus the few conversions
// that need care (k-th roots, logarithms, decimal rendering).
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace rootline {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numer(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denom(const Rational& x) { return boost::multiprecision::denominator(x); }

/// "p/q" with q > 0 and lowest terms; integers keep the "/1".
std::string to_string(const Rational& x);

/// Accepts "p/q", "p" or "-p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Fixed-point rendering truncated toward zero, for human consumption only.
std::string to_decimal(const Rational& x, int digits = 12);

double to_double(const Rational& x);

Rational pow(const Rational& base, unsigned exponent);
Rational pow2(int exponent);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational abs(const Rational& x);
int sign(const Rational& x);
inline std::strong_ordering three_way(const Rational& a, const Rational& b) {
  return a < b ? std::strong_ordering::less : (b < a ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Bracket [lo, hi] of x^{1/k} for x >= 0: lo^k <= x <= hi^k and
/// hi <= lo * (1 + 2^-bits). Both ends coincide when x is a perfect k-th power.
std::pair<Rational, Rational> kth_root_bounds(const Rational& x, unsigned k, unsigned bits = 64);

/// Upper bound on sqrt(x) with relative slack at most 2^-bits (exact for squares).
Rational sqrt_upper(const Rational& x, unsigned bits = 64);
Rational sqrt_lower(const Rational& x, unsigned bits = 64);

/// Rational bracket of ln(n) for n >= 1, width at most 2^-bits * ln(n) + 2^-bits.
std::pair<Rational, Rational> log_bounds(std::uint64_t n, unsigned bits = 96);
/// Rational bracket of ln(x) for rational x > 0.
std::pair<Rational, Rational> log_bounds(const Rational& x, unsigned bits = 96);

/// Decides e^k <= n (equivalently k <= ln n) exactly; e^k is never an integer for k >= 1.
bool exp_at_most(std::uint64_t k, std::uint64_t n);

/// Rational bracket of cos(pi * q), exact when the value is rational (Niven).
std::pair<Rational, Rational> cos_pi_bounds(const Rational& q, unsigned bits = 200);

}  // namespace rootline
