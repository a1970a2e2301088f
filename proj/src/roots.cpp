#include "rootline/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootline {

namespace {

// Clears denominators and content so Descartes transforms stay integral
// for as long as possible.
ExactPolynomial primitive(const ExactPolynomial& p) {
  if (p.is_zero()) return p;
  Integer l(1), g(0);
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, denom(c));
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational v = c * Rational(l);
    g = boost::multiprecision::gcd(g, numer(v));
    out.push_back(v);
  }
  if (p.leading() < 0) g = -g;
  for (auto& v : out) v /= Rational(g);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial divide_linear(const ExactPolynomial& p, const Rational& root) {
  return divmod(p, ExactPolynomial::linear_factor(root)).first;
}

// Open intervals may share an endpoint; only two exact roots at the same
// point would collide.
bool left_of(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.hi() < b.lo()) return true;
  return a.hi() == b.lo() && !(a.exact() && b.exact());
}

bool disjoint(const IsolatedRoot& a, const IsolatedRoot& b) { return left_of(a, b) || left_of(b, a); }

}  // namespace

Rational default_precision() { return pow2(-53); }

IsolatedRoot::IsolatedRoot(ExactPolynomial squarefree, Rational lo, Rational hi)
    : poly_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("IsolatedRoot: empty interval");
  if (!exact()) sign_lo_ = sign(poly_(lo_));
}

void IsolatedRoot::refine() {
  if (exact()) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sign(poly_(mid));
  if (s == 0) {
    lo_ = hi_ = mid;
  } else if (s == sign_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void IsolatedRoot::refine_to(const Rational& width) {
  while (!exact() && hi_ - lo_ > width) refine();
}

std::strong_ordering compare(IsolatedRoot a, const Rational& x) {
  for (;;) {
    if (a.exact()) return three_way(a.lo(), x);
    if (x <= a.lo()) return std::strong_ordering::greater;
    if (x >= a.hi()) return std::strong_ordering::less;
    if (a.polynomial()(x) == 0) return std::strong_ordering::equal;
    a.refine();
  }
}

std::strong_ordering compare(IsolatedRoot a, IsolatedRoot b) {
  bool common_checked = false;
  for (;;) {
    if (a.hi() < b.lo()) return std::strong_ordering::less;
    if (b.hi() < a.lo()) return std::strong_ordering::greater;
    if (a.exact()) {
      auto c = compare(b, a.lo());
      return 0 <=> c;
    }
    if (b.exact()) return compare(a, b.lo());
    if (!common_checked) {
      common_checked = true;
      ExactPolynomial g = gcd(a.polynomial(), b.polynomial());
      if (g.degree() >= 1) {
        Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
        // endpoints are not roots of g: g divides both polynomials
        if (lo < hi && !isolate_roots(g, lo, hi).empty()) return std::strong_ordering::equal;
      }
    }
    a.refine();
    b.refine();
  }
}

std::size_t sign_variations(const ExactPolynomial& p) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t descartes_bound(const ExactPolynomial& p, const Rational& a, const Rational& b) {
  // roots of p in (a, b) <-> roots of p(a + (b - a) y) in (0, 1)
  //                      <-> positive roots of (1 + z)^d q(1 / (1 + z))
  ExactPolynomial unit = scale_argument(taylor_shift(p, a), Rational(b - a));
  return sign_variations(taylor_shift(reversed(unit), Rational(1)));
}

Rational root_bound(const ExactPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading()));
  Rational bound = m + 1;
  Rational pw(1);
  while (pw <= bound) pw *= 2;
  return pw;
}

std::vector<IsolatedRoot> isolate_roots(const ExactPolynomial& squarefree, const Rational& a, const Rational& b) {
  std::vector<IsolatedRoot> found;
  if (squarefree.degree() < 1 || !(a < b)) return found;
  struct Task {
    ExactPolynomial poly;
    Rational lo, hi;
  };
  // Depth-first, left to right, so roots come out ascending.
  std::vector<Task> stack;
  stack.push_back({primitive(squarefree), a, b});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.lo == t.hi) {
      found.emplace_back(std::move(t.poly), t.lo, t.hi);
      continue;
    }
    std::size_t v = descartes_bound(t.poly, t.lo, t.hi);
    if (v == 0) continue;
    if (v == 1) {
      found.emplace_back(t.poly, t.lo, t.hi);
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    if (t.poly(mid) == 0) {
      ExactPolynomial rest = primitive(divide_linear(t.poly, mid));
      stack.push_back({rest, mid, t.hi});
      stack.push_back({ExactPolynomial::linear_factor(mid), mid, mid});
      stack.push_back({rest, t.lo, mid});
    } else {
      stack.push_back({t.poly, mid, t.hi});
      stack.push_back({std::move(t.poly), t.lo, mid});
    }
  }
  return found;
}

std::vector<std::pair<IsolatedRoot, unsigned>> isolated_roots(const ExactPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real roots of the zero polynomial");
  std::vector<std::pair<IsolatedRoot, unsigned>> roots;
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    Rational bound = root_bound(factors[i]);
    for (auto& r : isolate_roots(factors[i], Rational(-bound), bound))
      roots.emplace_back(std::move(r), static_cast<unsigned>(i + 1));
  }
  auto by_lo = [](const auto& x, const auto& y) {
    if (x.first.lo() != y.first.lo()) return x.first.lo() < y.first.lo();
    return x.first.hi() < y.first.hi();  // an exact root sorts before an open interval starting at it
  };
  std::sort(roots.begin(), roots.end(), by_lo);
  // intervals from different squarefree factors may overlap; the roots are
  // distinct, so refining both eventually separates them
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      auto& x = roots[i].first;
      auto& y = roots[i + 1].first;
      if (!disjoint(x, y)) {
        x.refine();
        y.refine();
        changed = true;
      }
    }
    if (changed) std::sort(roots.begin(), roots.end(), by_lo);
  }
  return roots;
}

std::vector<RootInterval> real_roots(const ExactPolynomial& p, const Rational& precision) {
  std::vector<RootInterval> out;
  for (auto& [root, mult] : isolated_roots(p)) {
    root.refine_to(precision);
    out.push_back(root.interval(mult));
  }
  return out;
}

std::size_t count_real_roots(const ExactPolynomial& p) {
  std::size_t total = 0;
  for (const auto& r : isolated_roots(p)) total += r.second;
  return total;
}

bool is_real_rooted(const ExactPolynomial& p) {
  return !p.is_zero() && count_real_roots(p) == static_cast<std::size_t>(p.degree());
}

std::optional<IsolatedRoot> largest_root(const ExactPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("largest root of the zero polynomial");
  ExactPolynomial f = primitive(squarefree_part(p));
  if (f.degree() < 1) return std::nullopt;
  Rational bound = root_bound(f);
  struct Task {
    ExactPolynomial poly;
    Rational lo, hi;
  };
  // Right-first search: the first root met is the largest.
  std::vector<Task> stack;
  stack.push_back({f, Rational(-bound), bound});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.lo == t.hi) return IsolatedRoot(t.poly, t.lo, t.hi);
    std::size_t v = descartes_bound(t.poly, t.lo, t.hi);
    if (v == 0) continue;
    if (v == 1) return IsolatedRoot(t.poly, t.lo, t.hi);
    Rational mid = (t.lo + t.hi) / 2;
    if (t.poly(mid) == 0) {
      ExactPolynomial rest = primitive(divide_linear(t.poly, mid));
      stack.push_back({rest, t.lo, mid});
      stack.push_back({ExactPolynomial::linear_factor(mid), mid, mid});
      stack.push_back({rest, mid, t.hi});
    } else {
      stack.push_back({t.poly, t.lo, mid});
      stack.push_back({std::move(t.poly), mid, t.hi});
    }
  }
  return std::nullopt;
}

RootInterval max_root(const ExactPolynomial& p, const Rational& precision) {
  auto root = largest_root(p);
  if (!root) throw std::domain_error("polynomial has no real root");
  root->refine_to(precision);
  return root->interval();
}

}  // namespace rootline
