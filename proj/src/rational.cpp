#include "fnspect/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fnspect {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::from_mpz(const mpz_class& n) {
  Rational r;
  r.value_ = mpq_class(n);
  return r;
}

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  // mpz_set_str rejects a leading '+'.
  auto strip_plus = [](const std::string& s) {
    return !s.empty() && s[0] == '+' ? s.substr(1) : s;
  };
  if (slash == std::string::npos) {
    if (!is_int(text, true)) return std::nullopt;
    return Rational(mpz_class(strip_plus(text)), mpz_class(1));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) return std::nullopt;
  mpz_class d(den);
  if (d == 0) return std::nullopt;
  return Rational(mpz_class(strip_plus(num)), d);
}

bool Rational::is_dyadic() const {
  const mpz_class& d = value_.get_den();
  // d > 0 and d & (d - 1) == 0
  mpz_class m = d - 1;
  mpz_class andv;
  mpz_and(andv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
  return andv == 0;
}

Rational Rational::abs() const {
  Rational r(*this);
  if (r.sign() < 0) r.value_ = -r.value_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(),
             value_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(),
             value_.get_den().get_mpz_t());
  return q;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  const bool neg = sign() < 0;
  mpz_class n = ::abs(value_.get_num());
  const mpz_class& d = value_.get_den();

  // Decimal exponent e: largest power with 10^e <= n/d.
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
  mpz_class pow10;
  auto cmp_pow = [&](long k) {
    // sign of n/d - 10^k, computed exactly
    if (k >= 0) {
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k));
      mpz_class rhs = pow10 * d;
      return cmp(n, rhs);
    }
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-k));
    mpz_class lhs = n * pow10;
    return cmp(lhs, d);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;

  // Scale so that the integer part has exactly `significant_digits` digits,
  // with one guard digit for rounding.
  long shift = significant_digits - 1 - e;
  mpz_class scaled;
  if (shift + 1 >= 0) {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift + 1));
    scaled = n * pow10 / d;
  } else {
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-(shift + 1)));
    scaled = n / (d * pow10);
  }
  // Round half away from zero on the guard digit.
  scaled = (scaled + 5) / 10;
  std::string digits = scaled.get_str();
  if (static_cast<long>(digits.size()) > significant_digits) {
    // Rounding carried into a new leading digit (e.g. 999.. -> 1000..).
    ++e;
    digits.resize(significant_digits);
  }

  std::string out;
  if (neg) out += "-";
  if (e >= significant_digits || e < -4) {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    out += digits.substr(0, e + 1);
    if (static_cast<long>(digits.size()) > e + 1) out += "." + digits.substr(e + 1);
  } else {
    out += "0.";
    for (long i = 0; i < -e - 1; ++i) out += "0";
    out += digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace {

// Simplest rational in [lo, hi] for 0 < lo <= hi, by continued-fraction
// descent.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  mpz_class fl = lo.floor();
  Rational fl_r = Rational::from_mpz(fl);
  Rational next_int = Rational::from_mpz(fl + 1);
  if (next_int <= hi) {
    // An integer lies in [lo, hi]; the smallest such is ceil(lo).
    return Rational::from_mpz(lo.ceil());
  }
  if (lo == fl_r) return lo;  // lo itself integral
  // Recurse on the fractional parts: x in [lo, hi] iff
  // 1/(x - fl) in [1/(hi - fl), 1/(lo - fl)].
  Rational a = (hi - fl_r).reciprocal();
  Rational b = (lo - fl_r).reciprocal();
  Rational inner = simplest_positive(a, b);
  return fl_r + inner.reciprocal();
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace fnspect
