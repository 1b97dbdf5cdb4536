#pragma once

#include "fnspect/function_model.hpp"
#include "fnspect/interval.hpp"

namespace fnspect {

/// Lebesgue integral of f over its domain by simple-function approximation:
/// exact bounds m <= f <= M are split into k levels (k starts at 8 and
/// doubles), the measure of each level set {f > t} is bracketed, and the
/// level sums from below and above enclose the integral. Countable
/// modifications provably do not move the value.
Enclosure lebesgue_integral(const FunctionModel& f, const Rational& tol);

/// Exact global bounds m <= f <= M over the domain (outer enclosure sides
/// plus all breakpoint, modification, and dense values).
Interval value_bounds(const FunctionModel& f);

}  // namespace fnspect
