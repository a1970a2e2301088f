#include "rootline/rational.hpp"

#include <cctype>
#include <stdexcept>

#include <gmp.h>
#include <mpfr.h>

namespace rootline {

namespace {

// RAII wrapper around an mpfr_t at a fixed precision.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

Rational to_rational(const Mpfr& x) {
  Integer mantissa;
  mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.backend().data(), x.get());
  Rational out(mantissa);
  return out * pow2(static_cast<int>(exponent));
}

std::size_t bit_length(const Integer& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.backend().data(), 2);
}

bool exact_root(const Integer& v, unsigned k, Integer& root) {
  return mpz_root(root.backend().data(), v.backend().data(), k) != 0;
}

}  // namespace

std::string to_string(const Rational& x) {
  return numer(x).str() + "/" + denom(x).str();
}

Rational parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational out(n, d);
  return negative ? Rational(-out) : out;
}

std::string to_decimal(const Rational& x, int digits) {
  Rational magnitude = abs(x);
  Integer whole = floor(magnitude);
  std::string out = (x < 0 ? "-" : "") + whole.str();
  if (digits <= 0) return out;
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  Integer frac = floor(Rational(magnitude - Rational(whole)) * Rational(scale));
  std::string tail = frac.str();
  out += "." + std::string(static_cast<std::size_t>(digits) - tail.size(), '0') + tail;
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1), b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational pow2(int exponent) {
  Integer one(1);
  if (exponent >= 0) return Rational(one << exponent);
  return Rational(one, Integer(one << -exponent));
}

Integer floor(const Rational& x) {
  Integer q, r;
  mpz_fdiv_qr(q.backend().data(), r.backend().data(), numer(x).backend().data(),
              denom(x).backend().data());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q, r;
  mpz_cdiv_qr(q.backend().data(), r.backend().data(), numer(x).backend().data(),
              denom(x).backend().data());
  return q;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

int sign(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

std::pair<Rational, Rational> kth_root_bounds(const Rational& x, unsigned k, unsigned bits) {
  if (k == 0) throw std::invalid_argument("kth_root_bounds: k must be positive");
  if (x < 0) throw std::domain_error("kth_root_bounds: negative radicand");
  if (x == 0 || k == 1) return {x, x};
  Integer a = numer(x), b = denom(x);
  Integer ra, rb;
  if (exact_root(a, k, ra) && exact_root(b, k, rb)) {
    Rational r(ra, rb);
    return {r, r};
  }
  // r0 = floor((a 2^{kB} / b)^{1/k}) is the k-th root scaled by 2^B.
  long shift = static_cast<long>(bits) + 2;
  long magnitude = static_cast<long>(bit_length(b)) - static_cast<long>(bit_length(a)) + 1;
  if (magnitude > 0) shift += (magnitude + static_cast<long>(k) - 1) / static_cast<long>(k);
  for (;;) {
    Integer scaled = (a << static_cast<unsigned>(shift * static_cast<long>(k))) / b;
    Integer r0;
    exact_root(scaled, k, r0);
    if (bit_length(r0) > bits + 1) {
      Rational lo = Rational(r0) * pow2(static_cast<int>(-shift));
      Rational hi = Rational(Integer(r0 + 1)) * pow2(static_cast<int>(-shift));
      return {lo, hi};
    }
    shift += static_cast<long>(bits);
  }
}

Rational sqrt_upper(const Rational& x, unsigned bits) { return kth_root_bounds(x, 2, bits).second; }

Rational sqrt_lower(const Rational& x, unsigned bits) { return kth_root_bounds(x, 2, bits).first; }

std::pair<Rational, Rational> log_bounds(std::uint64_t n, unsigned bits) {
  if (n == 0) throw std::domain_error("log_bounds: n must be positive");
  if (n == 1) return {Rational(0), Rational(0)};
  Mpfr arg(64), lo(bits + 16), hi(bits + 16);
  mpfr_set_ui(arg.get(), n, MPFR_RNDN);
  mpfr_log(lo.get(), arg.get(), MPFR_RNDD);
  mpfr_log(hi.get(), arg.get(), MPFR_RNDU);
  return {to_rational(lo), to_rational(hi)};
}

std::pair<Rational, Rational> log_bounds(const Rational& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log_bounds: argument must be positive");
  if (x == 1) return {Rational(0), Rational(0)};
  const auto precision = static_cast<mpfr_prec_t>(bits + 16);
  Mpfr arg_lo(precision), arg_hi(precision), lo(precision), hi(precision);
  mpfr_set_q(arg_lo.get(), x.backend().data(), MPFR_RNDD);
  mpfr_set_q(arg_hi.get(), x.backend().data(), MPFR_RNDU);
  mpfr_log(lo.get(), arg_lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), arg_hi.get(), MPFR_RNDU);
  return {to_rational(lo), to_rational(hi)};
}

bool exp_at_most(std::uint64_t k, std::uint64_t n) {
  if (k == 0) return n >= 1;
  for (mpfr_prec_t precision = 64;; precision *= 2) {
    Mpfr arg(64), lo(precision), hi(precision);
    mpfr_set_ui(arg.get(), k, MPFR_RNDN);
    mpfr_exp(lo.get(), arg.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), arg.get(), MPFR_RNDU);
    Rational target(n);
    if (to_rational(hi) <= target) return true;
    if (to_rational(lo) > target) return false;
  }
}

std::pair<Rational, Rational> cos_pi_bounds(const Rational& q, unsigned bits) {
  // reduce to [0, 2)
  Rational reduced = q - Rational(2) * Rational(floor(q / 2));
  const std::pair<Rational, Rational> niven[] = {
      {Rational(0), Rational(1)},        {Rational(1, 3), Rational(1, 2)},
      {Rational(1, 2), Rational(0)},     {Rational(2, 3), Rational(-1, 2)},
      {Rational(1), Rational(-1)},       {Rational(4, 3), Rational(-1, 2)},
      {Rational(3, 2), Rational(0)},     {Rational(5, 3), Rational(1, 2)},
  };
  for (const auto& [angle, value] : niven) {
    if (reduced == angle) return {value, value};
  }
  const mpfr_prec_t precision = static_cast<mpfr_prec_t>(bits) + 64;
  Mpfr pi(precision), num(precision), arg(precision), lo(precision), hi(precision);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_z(num.get(), numer(reduced).backend().data(), MPFR_RNDN);
  mpfr_mul(arg.get(), pi.get(), num.get(), MPFR_RNDN);
  mpfr_div_z(arg.get(), arg.get(), denom(reduced).backend().data(), MPFR_RNDN);
  mpfr_cos(lo.get(), arg.get(), MPFR_RNDD);
  mpfr_cos(hi.get(), arg.get(), MPFR_RNDU);
  // the argument carries a few ulps of error; cos is 1-Lipschitz
  Rational slack = pow2(-static_cast<int>(bits));
  Rational l = to_rational(lo) - slack, h = to_rational(hi) + slack;
  if (l < -1) l = -1;
  if (h > 1) h = 1;
  return {l, h};
}

}  // namespace rootline
