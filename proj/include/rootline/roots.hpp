// Certified real-root isolation over the rationals (Descartes' rule of signs
// with bisection) and exact comparison of real algebraic numbers given by an
// isolating interval.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "rootline/polynomial.hpp"

namespace rootline {

/// Isolating interval of one real root. lo == hi means the root is that
/// rational exactly; otherwise the root lies in the open interval (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// 2^-53.
Rational default_precision();

/// A real root of a squarefree polynomial, pinned by an interval whose open
/// interior contains exactly that root and whose endpoints are not roots.
class IsolatedRoot {
 public:
  IsolatedRoot(ExactPolynomial squarefree, Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  const ExactPolynomial& polynomial() const { return poly_; }

  /// Halves the interval (or lands exactly on the root).
  void refine();
  void refine_to(const Rational& width);
  RootInterval interval(unsigned multiplicity = 1) const { return {lo_, hi_, multiplicity}; }

 private:
  ExactPolynomial poly_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

std::strong_ordering compare(IsolatedRoot a, IsolatedRoot b);
std::strong_ordering compare(IsolatedRoot a, const Rational& x);

/// Sign variations in the coefficient sequence, zeros skipped.
std::size_t sign_variations(const ExactPolynomial& p);

/// Descartes bound on the number of roots of p in the open interval (a, b).
std::size_t descartes_bound(const ExactPolynomial& p, const Rational& a, const Rational& b);

/// Power of two strictly larger than the modulus of every complex root.
Rational root_bound(const ExactPolynomial& p);

/// Distinct real roots of a squarefree polynomial inside the open interval
/// (a, b), ascending.
std::vector<IsolatedRoot> isolate_roots(const ExactPolynomial& squarefree, const Rational& a, const Rational& b);

/// All distinct real roots of p (any multiplicities) with their multiplicity,
/// ascending. The isolating intervals are pairwise disjoint.
std::vector<std::pair<IsolatedRoot, unsigned>> isolated_roots(const ExactPolynomial& p);

/// Isolating intervals of width <= precision for every real root of p with
/// multiplicities, ascending. Throws std::invalid_argument for p == 0.
std::vector<RootInterval> real_roots(const ExactPolynomial& p, const Rational& precision = default_precision());

/// Number of real roots counted with multiplicity.
std::size_t count_real_roots(const ExactPolynomial& p);

bool is_real_rooted(const ExactPolynomial& p);

/// Largest real root, or nullopt if p has none.
std::optional<IsolatedRoot> largest_root(const ExactPolynomial& p);

/// Largest root refined to the given width; throws if p has no real root.
RootInterval max_root(const ExactPolynomial& p, const Rational& precision = default_precision());

}  // namespace rootline
