#pragma once

#include <vector>

#include "fnspect/interval.hpp"
#include "fnspect/interval_set.hpp"
#include "fnspect/polynomial.hpp"
#include "fnspect/rational.hpp"

namespace fnspect {

/// Comparison of a function value against a threshold.
enum class Relation { GT, GE, LT, LE };

/// Extended relation set used internally for failure-region computations.
enum class RelationEx { GT, GE, LT, LE, NE, EQ };

/// A real root of a polynomial: either an exact rational location or an
/// isolating bracket of width <= the requested tolerance containing exactly
/// one simple root of the square-free part.
struct RootLocation {
  bool exact = false;
  Rational point;            // valid when exact
  Rational bracket_lo, bracket_hi;  // valid when !exact; sign change inside

  Rational representative() const {
    return exact ? point : (bracket_lo + bracket_hi) / Rational(2);
  }
};

/// Distinct real roots of q strictly inside ]lo, hi[, sorted by position.
/// Rational roots are reported exactly whenever they are recoverable as the
/// simplest rational in their isolating bracket; other roots get brackets of
/// width <= tol. q must not be the zero polynomial.
std::vector<RootLocation> isolate_roots(const Polynomial& q, const Rational& lo,
                                        const Rational& hi, const Rational& tol);

/// Subset of the open interval ]span.lo, span.hi[ where q(x) rel 0.
/// Boundaries at non-rational roots are placed at bracket midpoints and the
/// brackets are reported in `boundaries`; the represented set differs from the
/// true set by at most the bracket widths.
struct SignRegions {
  IntervalSet set;
  std::vector<Enclosure> boundaries;
};

SignRegions polynomial_relation_regions(const Polynomial& q, RelationEx rel,
                                        const Interval& span, const Rational& tol);

}  // namespace fnspect
