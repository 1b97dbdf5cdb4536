#pragma once

// Canonical fixture models used across the test suites.

#include "fnspect/function_model.hpp"

namespace fnspect::fixtures {

// Step with the jump value on the upper branch: 0 on ]-1,0[, 1 on ]0,1[,
// H(-1)=0, H(0)=1, H(1)=1.
inline FunctionModel heaviside() {
  PiecewiseFunction base;
  base.breakpoints = {Rational(-1), Rational(0), Rational(1)};
  base.pieces = {Polynomial(), Polynomial({Rational(1)})};
  base.point_values = {Rational(0), Rational(1), Rational(1)};
  return FunctionModel(std::move(base), std::nullopt);
}

// Indicator of the rationals on [0,1]: base 0, dense modification 1.
inline FunctionModel dirichlet() {
  PiecewiseFunction base;
  base.breakpoints = {Rational(0), Rational(1)};
  base.pieces = {Polynomial()};
  base.point_values = {Rational(0), Rational(0)};
  return FunctionModel(std::move(base),
                       CountableModification::dense(DenseTag::Rationals, Rational(1)));
}

// x^2 on [lo, hi] with matching endpoint values.
inline FunctionModel square(const Rational& lo, const Rational& hi) {
  PiecewiseFunction base;
  base.breakpoints = {lo, hi};
  base.pieces = {Polynomial({Rational(0), Rational(0), Rational(1)})};
  base.point_values = {lo * lo, hi * hi};
  return FunctionModel(std::move(base), std::nullopt);
}

// Identity on [0,1].
inline FunctionModel ramp() {
  PiecewiseFunction base;
  base.breakpoints = {Rational(0), Rational(1)};
  base.pieces = {Polynomial({Rational(0), Rational(1)})};
  base.point_values = {Rational(0), Rational(1)};
  return FunctionModel(std::move(base), std::nullopt);
}

// Identity on [0,1] remapped to 1/2 on every dyadic rational.
inline FunctionModel dyadic_shift() {
  PiecewiseFunction base;
  base.breakpoints = {Rational(0), Rational(1)};
  base.pieces = {Polynomial({Rational(0), Rational(1)})};
  base.point_values = {Rational(0), Rational(1)};
  return FunctionModel(std::move(base),
                       CountableModification::dense(DenseTag::Dyadics, Rational(1, 2)));
}

// Constant c on [lo, hi].
inline FunctionModel constant(const Rational& c, const Rational& lo,
                              const Rational& hi) {
  PiecewiseFunction base;
  base.breakpoints = {lo, hi};
  base.pieces = {Polynomial::constant(c)};
  base.point_values = {c, c};
  return FunctionModel(std::move(base), std::nullopt);
}

}  // namespace fnspect::fixtures
