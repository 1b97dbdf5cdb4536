#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fnspect/compare.hpp"
#include "fnspect/darboux.hpp"
#include "fnspect/envelopes.hpp"
#include "fnspect/interval_set.hpp"
#include "fnspect/measurability.hpp"

namespace fnspect {

/// Rendering helpers shared by the report and CSV writers. Reports show every
/// rational exactly as num/den together with a decimal approximation to 12
/// significant digits; CSV cells carry the exact fraction only.
namespace render {

std::string annotated(const Rational& q);   // "p/q (decimal)"
std::string yes_no(bool b);
std::string interval_set(const IntervalSet& s);
std::string enclosure(const Enclosure& e);  // "[lo, hi] width w" or exact

}  // namespace render

/// A report plus optional CSV body, both rendered deterministically.
struct ReportDocument {
  std::string text;
  std::string csv;
};

ReportDocument classify_report(const FunctionModel& f,
                               const std::vector<Rational>& points);
ReportDocument envelope_report(const FunctionModel& f,
                               const std::vector<Rational>& grid);
ReportDocument analyze_report(const FunctionModel& f);
ReportDocument integrate_report(const FunctionModel& f, const Rational& tol,
                                int max_depth);
ReportDocument compare_report_document(const FunctionModel& f, const Rational& tol,
                                       int max_depth);

}  // namespace fnspect
