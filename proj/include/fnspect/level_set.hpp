#pragma once

#include <optional>
#include <vector>

#include "fnspect/function_model.hpp"
#include "fnspect/interval.hpp"
#include "fnspect/interval_set.hpp"
#include "fnspect/sign_analysis.hpp"

namespace fnspect {

const char* relation_name(Relation rel);
bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs);

/// Modification points lying inside (added) or outside (removed) the base
/// set; either an explicit finite list or a symbolic dense tag.
struct PointAdjustment {
  std::vector<Rational> finite;
  std::optional<DenseTag> dense;

  bool empty() const { return finite.empty() && !dense; }
};

/// The set {x : f(x) rel c} as an interval union from the polynomial pieces
/// and breakpoint values, adjusted by countable modification points.
/// Boundaries at non-rational piece roots sit at bracket midpoints; the
/// brackets are listed in boundary_enclosures.
struct LevelSet {
  IntervalSet base_set;
  PointAdjustment added_points;
  PointAdjustment removed_points;
  std::vector<Enclosure> boundary_enclosures;
};

/// Computes {x in domain : f(x) rel c}. Per piece the boundary is resolved by
/// sign analysis of piece - c (exact endpoints for recoverable rational
/// roots, brackets of width <= tol otherwise); breakpoint and finite
/// modification points are classified exactly by value comparison; a dense
/// modification is recorded symbolically.
LevelSet level_set(const FunctionModel& f, const Rational& c, Relation rel,
                   const Rational& tol);

/// Exact measure of the base set, inflated by the unresolved boundary
/// brackets. Countable added/removed points contribute nothing.
Enclosure level_measure(const LevelSet& ls);

}  // namespace fnspect
