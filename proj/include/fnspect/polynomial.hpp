#pragma once

#include <vector>

#include "fnspect/interval.hpp"
#include "fnspect/rational.hpp"

namespace fnspect {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree order. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading_coeff() const;

  Rational operator()(const Rational& x) const;
  /// Interval extension via Horner's scheme; inclusion-isotone.
  Interval eval_interval(const Interval& window) const;

  Polynomial derivative() const;
  Polynomial antiderivative() const;
  /// Exact definite integral over [lo, hi].
  Rational integral(const Rational& lo, const Rational& hi) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Rational& c) const;
  Polynomial operator-(const Rational& c) const;
  Polynomial operator*(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Polynomial remainder of *this divided by d (d nonzero).
  Polynomial rem(const Polynomial& d) const;
  /// Exact quotient; throws if the division leaves a remainder.
  Polynomial exact_div(const Polynomial& d) const;
  /// Monic gcd of a and b.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  /// Square-free part: this / gcd(this, this'). Zero polynomial maps to zero.
  Polynomial squarefree_part() const;

  /// Composition p(a + b*x): exact change of variable.
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace fnspect
