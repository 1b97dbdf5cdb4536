#pragma once

#include <utility>
#include <vector>

#include "fnspect/function_model.hpp"
#include "fnspect/interval.hpp"

namespace fnspect {

/// Lower/upper Darboux integral enclosures from uniform dyadic refinement.
/// gap = upper_integral.bounds.hi - lower_integral.bounds.lo; it is
/// non-increasing across nested refinements.
struct DarbouxResult {
  Enclosure lower_integral;
  Enclosure upper_integral;
  Rational gap;
  int partition_depth;
};

/// Darboux sums over an explicit partition: (lower, upper) enclosures of
/// sum(cell width x inf) and sum(cell width x sup). Per-cell bounds account
/// for the piece ranges, breakpoint and finite modification values inside the
/// closed cell, and the dense modification value on every cell.
std::pair<Enclosure, Enclosure> darboux_sums(const FunctionModel& f,
                                             const std::vector<Rational>& partition,
                                             const Rational& tol);

/// Uniform dyadic refinement (2^k cells, k = 1, 2, ...) until both integral
/// enclosures have width <= tol or k reaches max_depth. The returned
/// enclosures contain the true lower/upper Darboux integrals.
DarbouxResult darboux_integrals(const FunctionModel& f, const Rational& tol,
                                int max_depth);

/// Certified dyadic-ladder sums at one depth (2^depth cells), the quantities
/// darboux_integrals brackets with. All four are monotone in depth by
/// construction: the two f-sum bounds tighten inward, so the gap between
/// them never grows under refinement.
struct DyadicDepthSums {
  Rational lower_sum_bound;   // <= lower Darboux sum of f; non-decreasing
  Rational upper_sum_bound;   // >= upper Darboux sum of f; non-increasing
  Rational low_envelope_hi;   // >= upper sum of min(pieces, dense value)
  Rational high_envelope_lo;  // <= lower sum of max(pieces, dense value)
};

DyadicDepthSums dyadic_depth_sums(const FunctionModel& f, int depth);

}  // namespace fnspect
