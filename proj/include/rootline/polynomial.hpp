// Dense univariate polynomials over an exact scalar (Rational, Integer or a
// machine integer). Coefficients are stored in ascending degree order and the
// zero polynomial is the empty vector.
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootline/rational.hpp"

namespace rootline {

template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial identity() { return monomial(Scalar(1), 1); }
  /// (x - root)
  static Polynomial linear_factor(const Scalar& root) { return Polynomial({Scalar(-root), Scalar(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  /// Coefficient of x^{deg - i}: top(0) is the leading coefficient.
  Scalar top(std::size_t i) const {
    if (static_cast<int>(i) > degree()) return Scalar(0);
    return coeffs_[coeffs_.size() - 1 - i];
  }

  template <typename X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using ExactPolynomial = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> add(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) { return a + b; }

template <typename Scalar>
Polynomial<Scalar> multiply(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) { return a * b; }

template <typename Scalar>
Polynomial<Scalar> power(const Polynomial<Scalar>& p, unsigned exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1)), base = p;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

/// outer(inner(x)) by Horner's scheme on polynomials.
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& outer, const Polynomial<Scalar>& inner) {
  Polynomial<Scalar> acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial<Scalar>::constant(*it);
  return acc;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(out));
}

/// p(x + s): Taylor shift in O(d^2) additions.
template <typename Scalar>
Polynomial<Scalar> taylor_shift(const Polynomial<Scalar>& p, const Scalar& s) {
  std::vector<Scalar> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += s * c[j];
  }
  return Polynomial<Scalar>(std::move(c));
}

/// p(s * x).
template <typename Scalar>
Polynomial<Scalar> scale_argument(const Polynomial<Scalar>& p, const Scalar& s) {
  std::vector<Scalar> c = p.coeffs();
  Scalar f(1);
  for (auto& v : c) {
    v *= f;
    f *= s;
  }
  return Polynomial<Scalar>(std::move(c));
}

/// x^d p(1/x) for d = deg p.
template <typename Scalar>
Polynomial<Scalar> reversed(const Polynomial<Scalar>& p) {
  std::vector<Scalar> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Polynomial<Scalar>(std::move(c));
}

ExactPolynomial monic(const ExactPolynomial& p);

/// Same roots, leading coefficient +-1 with the sign of p's leading coefficient.
ExactPolynomial sign_normalized(const ExactPolynomial& p);

/// Polynomial whose roots are a*mu_i + b for the roots mu_i of p, via the
/// substitution x -> (x - b)/a, normalized to leading coefficient +-1 with the
/// sign of p's leading coefficient. Throws std::invalid_argument if a == 0.
ExactPolynomial shift_scale(const ExactPolynomial& p, const Rational& a, const Rational& b);

/// Euclidean division a = q b + r, deg r < deg b.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b);

/// Yun's decomposition p = c * prod_i f_i^i with squarefree, pairwise coprime
/// monic f_i. Entry i-1 holds f_i (possibly constant 1).
std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p);

/// Monic squarefree part p / gcd(p, p').
ExactPolynomial squarefree_part(const ExactPolynomial& p);

/// Number of equal leading coefficients after the (common) leading term:
/// largest k with top(i) equal for i = 1..k. Requires equal degrees.
std::size_t matched_top_coefficients(const ExactPolynomial& a, const ExactPolynomial& b);

}  // namespace rootline
