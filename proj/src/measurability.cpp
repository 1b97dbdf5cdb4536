#include "fnspect/measurability.hpp"

#include "fnspect/lebesgue.hpp"

namespace fnspect {

std::string MeasurabilityCertificate::exception_description() const {
  switch (mod_kind) {
    case ModKind::None: return "empty";
    case ModKind::Finite: return std::to_string(finite_exception_count) + " points";
    case ModKind::Dense:
      return std::string("countably infinite (") + dense_tag_name(*dense_tag) + ")";
  }
  return "?";
}

MeasurabilityCertificate measurability_report(const FunctionModel& f,
                                              int spot_check_count) {
  MeasurabilityCertificate cert;
  cert.piece_count = f.piece_count();
  cert.breakpoint_count = f.breakpoint_count();
  if (f.has_finite_modification()) {
    cert.mod_kind = MeasurabilityCertificate::ModKind::Finite;
    cert.finite_exception_count = f.modification()->points().size();
  } else if (f.has_dense_modification()) {
    cert.mod_kind = MeasurabilityCertificate::ModKind::Dense;
    cert.dense_tag = f.modification()->tag();
  }
  // Holds by construction of the model class: a Borel base plus a countable
  // exception set stays Borel-measurable.
  cert.measurable = true;

  if (spot_check_count > 0) {
    Interval bounds = value_bounds(f);
    FunctionModel base_only = f.without_modification();
    const Rational tol(1, 1024);
    for (int j = 1; j <= spot_check_count; ++j) {
      // Deterministic thresholds strictly between the value bounds.
      Rational c = bounds.lo() + bounds.width() * Rational(j) /
                                     Rational(spot_check_count + 1);
      LevelSet ls = level_set(f, c, Relation::GT, tol);
      LevelSet ls_base = level_set(base_only, c, Relation::GT, tol);
      LevelSpotCheck check;
      check.threshold = c;
      check.rel = Relation::GT;
      check.measure = level_measure(ls);
      check.measure_matches_base = check.measure == level_measure(ls_base);
      cert.spot_checks.push_back(std::move(check));
    }
  }
  return cert;
}

}  // namespace fnspect
