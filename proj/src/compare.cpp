#include "fnspect/compare.hpp"

#include <stdexcept>

#include "fnspect/lebesgue.hpp"
#include "fnspect/sign_analysis.hpp"

namespace fnspect {

const char* riemann_verdict_name(RiemannVerdict v) {
  switch (v) {
    case RiemannVerdict::Yes: return "YES";
    case RiemannVerdict::No: return "NO";
    case RiemannVerdict::UndecidedAtTolerance: return "UNDECIDED_AT_TOLERANCE";
  }
  return "?";
}

Enclosure oscillation_measure(const FunctionModel& f, const Rational& eps,
                              const Rational& tol) {
  if (eps.sign() <= 0)
    throw std::invalid_argument("oscillation_measure: eps must be positive");
  if (!f.has_dense_modification()) {
    // Oscillation is positive only at breakpoints and finite modification
    // points: a finite, measure-zero set.
    return Enclosure::exact(Rational(0));
  }
  // Away from the countably many special points, the oscillation at x inside
  // piece p is |p(x) - v|.
  const Rational& v = f.modification()->dense_value();
  const auto& bp = f.base().breakpoints;
  Rational measure_lo(0), measure_hi(0);
  bool converged = true;
  for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
    Interval span(bp[i], bp[i + 1]);
    const Polynomial& p = f.base().pieces[i];
    SignRegions above = polynomial_relation_regions(p - (v + eps), RelationEx::GE,
                                                    span, tol);
    SignRegions below = polynomial_relation_regions(p - (v - eps), RelationEx::LE,
                                                    span, tol);
    IntervalSet both = IntervalSet::set_union(above.set, below.set);
    Rational base = both.measure();
    Rational slack(0);
    for (const auto& b : above.boundaries) {
      slack += b.width() / Rational(2);
      converged = converged && b.converged();
    }
    for (const auto& b : below.boundaries) {
      slack += b.width() / Rational(2);
      converged = converged && b.converged();
    }
    measure_lo += max(base - slack, Rational(0));
    measure_hi += base + slack;
  }
  return Enclosure(Interval(measure_lo, measure_hi), converged);
}

ComparisonReport compare_report(const FunctionModel& f, const Rational& tol,
                                int max_depth) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("compare_report: tol must be positive");

  ComparisonReport report;
  report.darboux = darboux_integrals(f, tol, max_depth);
  report.lebesgue_value = lebesgue_integral(f, tol);

  constexpr int kOscillationLevels = 10;
  const Rational region_tol = tol / Rational(4);
  for (int j = 1; j <= kOscillationLevels; ++j) {
    Rational eps(1, 1L << j);
    report.oscillation_evidence.push_back(
        OscillationBound{eps, oscillation_measure(f, eps, region_tol)});
  }

  const Enclosure& lower = report.darboux.lower_integral;
  const Enclosure& upper = report.darboux.upper_integral;
  if (report.darboux.gap <= tol) {
    report.riemann_integrable = RiemannVerdict::Yes;
    report.riemann_value =
        Enclosure(Interval(lower.bounds().lo(), upper.bounds().hi()),
                  report.darboux.gap <= tol);
    report.agree =
        report.riemann_value->bounds().intersects(report.lebesgue_value.bounds());
  } else {
    // A certified gap: the true integrals are separated by more than tol.
    bool separated = upper.bounds().lo() - lower.bounds().hi() > tol;
    bool structural = false;
    for (const auto& ob : report.oscillation_evidence) {
      if (ob.measure_bound.bounds().lo().sign() > 0) structural = true;
    }
    if (separated && f.has_dense_modification() && structural)
      report.riemann_integrable = RiemannVerdict::No;
    else
      report.riemann_integrable = RiemannVerdict::UndecidedAtTolerance;
  }
  return report;
}

}  // namespace fnspect
