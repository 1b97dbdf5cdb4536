#pragma once

// Test-only oracles, independent of the implementation paths they check:
// exact antiderivatives for integrals, dense-grid sampling for ranges, and
// shrinking-window sampling for envelope values.

#include <utility>
#include <vector>

#include "fnspect/function_model.hpp"
#include "fnspect/polynomial.hpp"

namespace fnspect::oracles {

// Exact integral of the base piecewise polynomial via antiderivatives.
// Countable modifications carry no mass, so this is also the exact Lebesgue
// integral (and the Riemann integral when it exists) of the modified model.
inline Rational piecewise_integral(const FunctionModel& f) {
  Rational total(0);
  const auto& bp = f.base().breakpoints;
  for (std::size_t i = 0; i < f.base().pieces.size(); ++i)
    total += f.base().pieces[i].integral(bp[i], bp[i + 1]);
  return total;
}

// Min/max of p over `samples`+1 equally spaced points of the window.
inline std::pair<Rational, Rational> sampled_range(const Polynomial& p,
                                                   const Interval& window,
                                                   long samples) {
  Rational step = window.width() / Rational(samples);
  Rational lo = p(window.lo());
  Rational hi = lo;
  Rational x = window.lo();
  for (long j = 1; j <= samples; ++j) {
    x += step;
    Rational v = p(j == samples ? window.hi() : x);
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  }
  return {lo, hi};
}

// Shrinking-window estimate of the two-sided envelopes at x: samples the
// window ]x-eps, x+eps[ (intersected with the domain) at `samples` points,
// plus x itself, every breakpoint, and every finite modification point inside
// the window. Returns (sup_estimate, inf_estimate).
inline std::pair<Rational, Rational> sampled_two_sided(const FunctionModel& f,
                                                       const Rational& x,
                                                       const Rational& eps,
                                                       long samples) {
  Rational wlo = max(f.domain_lo(), x - eps);
  Rational whi = min(f.domain_hi(), x + eps);
  Rational sup = f.evaluate(x);
  Rational inf = sup;
  auto consider = [&](const Rational& y) {
    Rational v = f.evaluate(y);
    if (sup < v) sup = v;
    if (v < inf) inf = v;
  };
  Rational step = (whi - wlo) / Rational(samples);
  if (step.sign() > 0) {
    Rational y = wlo;
    for (long j = 1; j < samples; ++j) {
      y += step;
      consider(y);
    }
  }
  for (const auto& b : f.base().breakpoints) {
    if (wlo < b && b < whi) consider(b);
  }
  if (f.has_finite_modification()) {
    for (const auto& pv : f.modification()->points()) {
      if (wlo < pv.x && pv.x < whi) consider(pv.x);
    }
  }
  return {sup, inf};
}

}  // namespace fnspect::oracles
