#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace fnspect {

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator; every arithmetic operation is exact. This is the only
/// scalar that appears in results anywhere in the engine.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  static Rational from_mpz(const mpz_class& n);

  /// Parses "n" or "p/q" with optional leading sign; q must be positive.
  /// Returns nullopt on malformed input.
  static std::optional<Rational> parse(const std::string& text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True when the reduced denominator is a power of two.
  bool is_dyadic() const;
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;
  /// Largest integer <= *this, as an exact integer value.
  mpz_class floor() const;
  mpz_class ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical rendering: "n" for integers, otherwise "p/q".
  std::string to_string() const;
  /// Decimal approximation with the given number of significant digits
  /// (round half away from zero). Annotation only; never fed back into math.
  std::string to_decimal(int significant_digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  mpq_class value_;
};

const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// Rational with the smallest denominator in the closed interval [lo, hi]
/// (Stern-Brocot descent). Used to recover exact rational roots from
/// isolating brackets.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace fnspect
