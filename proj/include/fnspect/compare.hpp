#pragma once

#include <optional>
#include <vector>

#include "fnspect/darboux.hpp"
#include "fnspect/function_model.hpp"
#include "fnspect/interval.hpp"

namespace fnspect {

enum class RiemannVerdict { Yes, No, UndecidedAtTolerance };

const char* riemann_verdict_name(RiemannVerdict v);

/// Enclosure of measure{x : oscillation of f at x >= epsilon}.
struct OscillationBound {
  Rational epsilon;
  Enclosure measure_bound;
};

/// Riemann-vs-Lebesgue comparison. riemann_integrable = YES certifies
/// gap <= tol; NO requires a certified positive gap together with structural
/// dense-modification evidence (a sub-domain of positive measure where the
/// oscillation stays above some epsilon).
struct ComparisonReport {
  RiemannVerdict riemann_integrable = RiemannVerdict::UndecidedAtTolerance;
  std::optional<Enclosure> riemann_value;
  Enclosure lebesgue_value;
  std::optional<bool> agree;
  std::vector<OscillationBound> oscillation_evidence;
  DarbouxResult darboux;  // the underlying dyadic refinement outcome
};

ComparisonReport compare_report(const FunctionModel& f, const Rational& tol,
                                int max_depth);

/// Enclosure of measure{x : oscillation >= eps}; exact zero without a dense
/// modification (only countably many positive-oscillation points), otherwise
/// the measure of {|piece - dense value| >= eps} across pieces.
Enclosure oscillation_measure(const FunctionModel& f, const Rational& eps,
                              const Rational& tol);

}  // namespace fnspect
