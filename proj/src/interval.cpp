#include "fnspect/interval.hpp"

#include <stdexcept>
#include <utility>

namespace fnspect {

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

Interval Interval::operator+(const Interval& o) const {
  return Interval(lo_ + o.lo_, hi_ + o.hi_);
}

Interval Interval::operator*(const Interval& o) const {
  Rational p1 = lo_ * o.lo_;
  Rational p2 = lo_ * o.hi_;
  Rational p3 = hi_ * o.lo_;
  Rational p4 = hi_ * o.hi_;
  return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval Interval::operator+(const Rational& c) const {
  return Interval(lo_ + c, hi_ + c);
}

Interval Interval::operator*(const Rational& c) const {
  if (c.sign() >= 0) return Interval(lo_ * c, hi_ * c);
  return Interval(hi_ * c, lo_ * c);
}

}  // namespace fnspect
