#pragma once

#include "fnspect/interval.hpp"
#include "fnspect/polynomial.hpp"

namespace fnspect {

struct RangePair {
  Enclosure sup;
  Enclosure inf;
};

inline constexpr int kRangeDepthCap = 64;

/// Rigorous bounds for the supremum and infimum of p over the closed window.
///
/// Outer bounds come from interval Horner evaluation, inner bounds from exact
/// point evaluations at subdivision endpoints and midpoints. A sub-window is
/// bisected while its Horner width exceeds tol, so the refinement tree below
/// any sub-window depends only on that sub-window; bounds are therefore
/// inclusion-isotone across nested windows and across tolerance halving.
///
/// Both enclosures have width <= tol unless the depth cap was hit, in which
/// case converged = false on the affected enclosure.
RangePair range_enclosure(const Polynomial& p, const Interval& window,
                          const Rational& tol, int depth_cap = kRangeDepthCap);

}  // namespace fnspect
