#include "fnspect/scaled_grid.hpp"

namespace fnspect {

ScaledGridPoly::ScaledGridPoly(const Polynomial& p, const Rational& alpha,
                               const Rational& step) {
  // Variable scale C: makes alpha and step integral.
  mpz_class c;
  mpz_lcm(c.get_mpz_t(), alpha.den().get_mpz_t(), step.den().get_mpz_t());
  grid_a_ = alpha.num() * (c / alpha.den());
  grid_b_ = step.num() * (c / step.den());

  // Value scale: P(X) = L * C^deg * p(X/C) with L clearing the coefficient
  // denominators.
  mpz_class l(1);
  for (const auto& coef : p.coeffs()) {
    mpz_class t;
    mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), coef.den().get_mpz_t());
    l = t;
  }
  const int deg = p.degree() < 0 ? 0 : p.degree();
  coeffs_.reserve(p.coeffs().size());
  mpz_class cpow(1);  // C^(deg - i), built from the top down
  std::vector<mpz_class> cpows(static_cast<std::size_t>(deg) + 1);
  for (int i = deg; i >= 0; --i) {
    cpows[static_cast<std::size_t>(i)] = cpow;
    cpow *= c;
  }
  denom_ = l;
  for (int i = 0; i < deg; ++i) denom_ *= c;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Rational& coef = p.coeffs()[i];
    coeffs_.push_back(coef.num() * (l / coef.den()) * cpows[i]);
  }
}

void ScaledGridPoly::eval(unsigned long j, mpz_class& out) const {
  xlo_ = grid_a_ + mpz_class(grid_b_ * j);
  out = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= xlo_;
    out += *it;
  }
}

void ScaledGridPoly::eval_interval(unsigned long jlo, unsigned long jhi,
                                   mpz_class& out_lo, mpz_class& out_hi) const {
  xlo_ = grid_a_ + mpz_class(grid_b_ * jlo);
  xhi_ = grid_a_ + mpz_class(grid_b_ * jhi);
  out_lo = 0;
  out_hi = 0;
  const int sx_lo = sgn(xlo_);
  const int sx_hi = sgn(xhi_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (sx_lo >= 0) {
      // X >= 0: products are monotone in both factors.
      m1_ = out_lo * (sgn(out_lo) >= 0 ? xlo_ : xhi_);
      m2_ = out_hi * (sgn(out_hi) >= 0 ? xhi_ : xlo_);
    } else if (sx_hi <= 0) {
      // X <= 0: multiplication flips the interval.
      m1_ = out_hi * (sgn(out_hi) >= 0 ? xlo_ : xhi_);
      m2_ = out_lo * (sgn(out_lo) >= 0 ? xhi_ : xlo_);
    } else {
      // X straddles zero: fall back to all four products.
      m1_ = out_lo * xlo_;
      m2_ = out_lo * xhi_;
      m3_ = out_hi * xlo_;
      m4_ = out_hi * xhi_;
      if (m2_ < m1_) mpz_swap(m1_.get_mpz_t(), m2_.get_mpz_t());
      if (m4_ < m3_) mpz_swap(m3_.get_mpz_t(), m4_.get_mpz_t());
      if (m3_ < m1_) mpz_swap(m1_.get_mpz_t(), m3_.get_mpz_t());
      if (m4_ > m2_) mpz_swap(m2_.get_mpz_t(), m4_.get_mpz_t());
    }
    out_lo = m1_ + *it;
    out_hi = m2_ + *it;
  }
}

}  // namespace fnspect
