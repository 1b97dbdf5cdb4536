#pragma once

#include "fnspect/rational.hpp"

namespace fnspect {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
class Interval {
public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational lo, Rational hi);

  static Interval point(const Rational& x) { return Interval(x, x); }
  static Interval hull(const Interval& a, const Interval& b);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  Interval operator+(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator+(const Rational& c) const;
  Interval operator*(const Rational& c) const;

private:
  Rational lo_, hi_;
};

/// Interval certified to contain a real analytic quantity, together with a
/// flag recording whether the requested width tolerance was met.
class Enclosure {
public:
  Enclosure() : bounds_(), converged_(true) {}
  Enclosure(Interval bounds, bool converged)
      : bounds_(std::move(bounds)), converged_(converged) {}

  static Enclosure exact(const Rational& value) {
    return Enclosure(Interval::point(value), true);
  }

  const Interval& bounds() const { return bounds_; }
  Rational width() const { return bounds_.width(); }
  bool converged() const { return converged_; }
  bool contains(const Rational& x) const { return bounds_.contains(x); }
  bool is_exact() const { return bounds_.is_point(); }

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.bounds_ == b.bounds_ && a.converged_ == b.converged_;
  }

private:
  Interval bounds_;
  bool converged_;
};

}  // namespace fnspect
