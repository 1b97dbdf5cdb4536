#include "fnspect/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace fnspect {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  if (c.is_zero()) return Polynomial();
  return Polynomial({c});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::leading_coeff() const {
  if (coeffs_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Interval Polynomial::eval_interval(const Interval& window) const {
  if (coeffs_.empty()) return Interval::point(Rational(0));
  if (window.is_point()) return Interval::point((*this)(window.lo()));
  Interval acc = Interval::point(Rational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * window + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rational> a(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Rational Polynomial::integral(const Rational& lo, const Rational& hi) const {
  Polynomial anti = antiderivative();
  return anti(hi) - anti(lo);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.push_back(-q);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  if (v.empty()) v.push_back(c);
  else v[0] += c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Rational& c) const { return *this + (-c); }

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& q : coeffs_) v.push_back(q * c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::rem(const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("Polynomial::rem: zero divisor");
  std::vector<Rational> r = coeffs_;
  const int dd = d.degree();
  while (static_cast<int>(r.size()) - 1 >= dd) {
    Rational factor = r.back() / d.leading_coeff();
    int shift = static_cast<int>(r.size()) - 1 - dd;
    for (int i = 0; i <= dd; ++i)
      r[static_cast<std::size_t>(i + shift)] -= factor * d.coeffs_[static_cast<std::size_t>(i)];
    // The leading term cancels exactly; drop it and any new zeros.
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.empty()) break;
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("Polynomial::exact_div: zero divisor");
  if (is_zero()) return Polynomial();
  if (degree() < d.degree())
    throw std::invalid_argument("Polynomial::exact_div: degree too small");
  std::vector<Rational> r = coeffs_;
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree()) + 1,
                          Rational(0));
  const int dd = d.degree();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    std::size_t top = static_cast<std::size_t>(k + dd);
    Rational factor = r[top] / d.leading_coeff();
    q[static_cast<std::size_t>(k)] = factor;
    for (int i = 0; i <= dd; ++i)
      r[static_cast<std::size_t>(i + k)] -= factor * d.coeffs_[static_cast<std::size_t>(i)];
  }
  for (const auto& c : r)
    if (!c.is_zero())
      throw std::invalid_argument("Polynomial::exact_div: nonzero remainder");
  return Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.rem(y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  // Normalize to monic form.
  return x * x.leading_coeff().reciprocal();
}

Polynomial Polynomial::squarefree_part() const {
  if (is_zero()) return Polynomial();
  if (degree() == 0) return *this;
  Polynomial g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  return exact_div(g);
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  // p(a + b*x) by Horner: acc <- acc*(a + b x) + c_i.
  Polynomial shift({a, b});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * shift + *it;
  }
  return acc;
}

}  // namespace fnspect
