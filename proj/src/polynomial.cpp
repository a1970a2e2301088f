#include "rootline/polynomial.hpp"

namespace rootline {

ExactPolynomial monic(const ExactPolynomial& p) {
  if (p.is_zero()) return p;
  ExactPolynomial out = p;
  out *= Rational(1) / p.leading();
  return out;
}

ExactPolynomial sign_normalized(const ExactPolynomial& p) {
  if (p.is_zero()) return p;
  ExactPolynomial out = p;
  out *= Rational(1) / abs(p.leading());
  return out;
}

ExactPolynomial shift_scale(const ExactPolynomial& p, const Rational& a, const Rational& b) {
  if (a == 0) throw std::invalid_argument("shift_scale: scale factor must be nonzero");
  if (p.is_zero()) return p;
  ExactPolynomial substituted = taylor_shift(scale_argument(p, Rational(Rational(1) / a)), Rational(-b));
  ExactPolynomial out = monic(substituted);
  if (p.leading() < 0) out *= Rational(-1);
  return out;
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {ExactPolynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    Rational f = rem[i] * inv_lead;
    quot[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial x = a, y = b;
  while (!y.is_zero()) {
    ExactPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

std::vector<ExactPolynomial> squarefree_decomposition(const ExactPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<ExactPolynomial> out;
  ExactPolynomial f = monic(p);
  ExactPolynomial df = derivative(f);
  ExactPolynomial a = gcd(f, df);
  ExactPolynomial b = divmod(f, a).first;
  ExactPolynomial c = divmod(df, a).first;
  ExactPolynomial d = c - derivative(b);
  while (b.degree() >= 1) {
    ExactPolynomial g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

ExactPolynomial squarefree_part(const ExactPolynomial& p) {
  if (p.degree() < 1) return monic(p);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

std::size_t matched_top_coefficients(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("matched_top_coefficients: degree mismatch");
  std::size_t k = 0;
  const auto d = static_cast<std::size_t>(std::max(a.degree(), 0));
  while (k < d && a.top(k + 1) == b.top(k + 1)) ++k;
  return k;
}

}  // namespace rootline
