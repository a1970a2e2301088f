// Chebyshev polynomials of the first kind.
#pragma once

#include <vector>

#include "rootline/polynomial.hpp"
#include "rootline/roots.hpp"

namespace rootline {

/// T_k with exact integer coefficients from T_{k+1} = 2x T_k - T_{k-1}.
ExactPolynomial cheb_poly(unsigned k);

/// T_k(x) by the three-term recurrence at the point x, no expansion.
Rational cheb_eval(unsigned k, const Rational& x);

/// The n roots cos((theta + 2 pi i) / n), i = 0..n-1, of T_n(x) - cos(theta),
/// in that order, for theta = angle * pi. Each comes as a certified
/// rational interval; exact when the cosine is rational.
std::vector<RootInterval> cheb_shifted_roots(unsigned n, const Rational& angle);

/// A rational b with (1 + sqrt(2x))^k / 2 <= b <= T_k(1 + x), x >= 0.
Rational cheb_growth_lower_bound(unsigned k, const Rational& x);

}  // namespace rootline
