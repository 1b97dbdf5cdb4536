#pragma once

#include <gmpxx.h>

#include "fnspect/polynomial.hpp"
#include "fnspect/rational.hpp"

namespace fnspect {

/// Exact integer rescaling of a polynomial restricted to a uniform grid.
///
/// For the grid x_j = alpha + j * step, both the variable and the value are
/// scaled by positive integers: X = C*x makes every grid point integral and
/// P(X) = D * p(X / C) has integer coefficients. Interval Horner on (P, X)
/// performs the same min/max selections as the rational interval Horner on
/// (p, x) — positive scaling preserves order — so the fast path is bit-exact
/// with the rational path, including its inclusion isotonicity.
class ScaledGridPoly {
public:
  ScaledGridPoly(const Polynomial& p, const Rational& alpha, const Rational& step);

  /// p(x_j) = eval(j) / denom().
  const mpz_class& denom() const { return denom_; }

  /// P(X_j), exact.
  void eval(unsigned long j, mpz_class& out) const;

  /// Bounds of P over the X-image of [x_jlo, x_jhi] by interval Horner;
  /// equals denom() times the rational interval-Horner bounds of p.
  void eval_interval(unsigned long jlo, unsigned long jhi, mpz_class& out_lo,
                     mpz_class& out_hi) const;

private:
  std::vector<mpz_class> coeffs_;  // ascending; P(X) = sum coeffs_[i] X^i
  mpz_class denom_;                // D > 0
  mpz_class grid_a_, grid_b_;      // X_j = grid_a_ + j * grid_b_, grid_b_ > 0
  // Scratch registers so the hot loops stay allocation-free.
  mutable mpz_class xlo_, xhi_, m1_, m2_, m3_, m4_;
};

}  // namespace fnspect
