#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fnspect/function_model.hpp"
#include "fnspect/interval_set.hpp"
#include "fnspect/rational.hpp"
#include "fnspect/sign_analysis.hpp"

namespace fnspect {

enum class Side { Left, Right };
enum class PointProperty { Usc, Lsc, LeftCont, RightCont, Cont };

const char* point_property_name(PointProperty p);

/// Boolean continuity profile at a query point. An undefined one-sided limit
/// (at the matching domain endpoint) counts as vacuously continuous on that
/// side.
struct PointClass {
  bool is_usc = false;
  bool is_lsc = false;
  bool is_left_cont = false;
  bool is_right_cont = false;
  bool is_cont = false;
};

bool property_holds(const PointClass& pc, PointProperty prop);

/// All envelope values at one point. One-sided fields are absent at the
/// domain endpoint whose window is empty.
struct EnvelopeValues {
  Rational value;  // f(x)
  Rational two_sided_sup;
  Rational two_sided_inf;
  std::optional<Rational> left_sup, left_inf;
  std::optional<Rational> right_sup, right_inf;
  Rational oscillation;  // two_sided_sup - two_sided_inf
};

/// Exact limsup/liminf of f(y) as y -> x over shrinking symmetric windows
/// containing x (intersected with the domain). Returns (sup, inf).
///
/// Within this model class the limit is attained symbolically: it is the
/// max/min over the point's own value, the one-sided polynomial limits of the
/// adjacent pieces, and the dense modification value when one is present.
std::pair<Rational, Rational> two_sided_limits(const FunctionModel& f,
                                               const Rational& x);

/// Exact one-sided envelope over the open window ]x-eps, x[ or ]x, x+eps[,
/// excluding x itself. nullopt at the domain endpoint where the window is
/// empty.
std::optional<std::pair<Rational, Rational>> one_sided_limits(
    const FunctionModel& f, const Rational& x, Side side);

PointClass classify_point(const FunctionModel& f, const Rational& x);

EnvelopeValues envelope_values(const FunctionModel& f, const Rational& x);

/// Per-point envelope rows for a grid of query points. Throws DomainError
/// naming the first offending point if any grid entry is outside the domain.
std::vector<std::pair<Rational, EnvelopeValues>> envelope_table(
    const FunctionModel& f, const std::vector<Rational>& grid);

/// Failure regions of a property under a symbolic dense modification, split
/// by whether the points in question belong to the dense set.
struct DenseFailureRegions {
  DenseTag tag;
  Rational value;
  IntervalSet on_modified;    // dense-set points that fail, as sub-domain
  IntervalSet on_unmodified;  // complement points that fail, as sub-domain
  std::vector<Enclosure> boundaries;
};

/// Where a pointwise property fails. Without a dense modification the failure
/// set is the exact finite list `point_failures` (a subset of breakpoints and
/// finite modification points). With a dense modification, failures on the
/// dense set and on its complement are reported symbolically as sub-domain
/// regions; `point_failures` then lists only failing points outside the dense
/// set.
struct ExceptionReport {
  PointProperty property;
  std::vector<Rational> point_failures;
  std::optional<DenseFailureRegions> dense;

  bool empty() const { return point_failures.empty() && !dense; }
};

ExceptionReport exceptional_points(const FunctionModel& f, PointProperty prop,
                                   const Rational& tol = Rational(1, 1 << 20));

}  // namespace fnspect
