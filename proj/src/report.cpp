#include "fnspect/report.hpp"

#include <sstream>

#include "fnspect/lebesgue.hpp"
#include "fnspect/level_set.hpp"

namespace fnspect {

namespace render {

std::string annotated(const Rational& q) {
  return q.to_string() + " (" + q.to_decimal() + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string interval_set(const IntervalSet& s) {
  if (s.is_empty()) return "{}";
  std::ostringstream out;
  bool first = true;
  for (const auto& c : s.components()) {
    if (!first) out << " ";
    first = false;
    if (c.is_singleton()) {
      out << "{" << c.lo << "}";
    } else {
      out << (c.lo_open ? "(" : "[") << c.lo << "," << c.hi
          << (c.hi_open ? ")" : "]");
    }
  }
  return out.str();
}

std::string enclosure(const Enclosure& e) {
  std::ostringstream out;
  if (e.is_exact()) {
    out << annotated(e.bounds().lo()) << " exactly";
  } else {
    out << "[" << e.bounds().lo() << ", " << e.bounds().hi() << "] width "
        << annotated(e.width());
  }
  if (!e.converged()) out << " (not converged)";
  return out.str();
}

}  // namespace render

namespace {

std::string csv_cell(const Rational& q) { return q.to_string(); }

void describe_model(std::ostream& out, const FunctionModel& f) {
  out << "domain [" << f.domain_lo() << ", " << f.domain_hi() << "], "
      << f.piece_count() << " piece" << (f.piece_count() == 1 ? "" : "s");
  if (f.has_finite_modification()) {
    out << ", finite modification at " << f.modification()->points().size()
        << " point" << (f.modification()->points().size() == 1 ? "" : "s");
  } else if (f.has_dense_modification()) {
    out << ", dense modification (" << dense_tag_name(f.modification()->tag())
        << " -> " << f.modification()->dense_value() << ")";
  }
  out << "\n";
}

}  // namespace

ReportDocument classify_report(const FunctionModel& f,
                               const std::vector<Rational>& points) {
  std::ostringstream text, csv;
  text << "classification\n";
  describe_model(text, f);
  csv << "x,usc,lsc,left_cont,right_cont,cont\n";
  for (const auto& x : points) {
    PointClass pc = classify_point(f, x);
    text << "x=" << x << ": usc=" << render::yes_no(pc.is_usc)
         << " lsc=" << render::yes_no(pc.is_lsc)
         << " left=" << render::yes_no(pc.is_left_cont)
         << " right=" << render::yes_no(pc.is_right_cont)
         << " cont=" << render::yes_no(pc.is_cont) << "\n";
    csv << csv_cell(x) << "," << render::yes_no(pc.is_usc) << ","
        << render::yes_no(pc.is_lsc) << "," << render::yes_no(pc.is_left_cont)
        << "," << render::yes_no(pc.is_right_cont) << ","
        << render::yes_no(pc.is_cont) << "\n";
  }
  return {text.str(), csv.str()};
}

ReportDocument envelope_report(const FunctionModel& f,
                               const std::vector<Rational>& grid) {
  std::ostringstream text, csv;
  text << "envelopes\n";
  describe_model(text, f);
  csv << "x,f,fstar,flstar,fstar_left,finf_left,fstar_right,finf_right,osc\n";
  auto rows = envelope_table(f, grid);
  auto opt_cell = [](const std::optional<Rational>& q) {
    return q ? q->to_string() : std::string();
  };
  auto opt_text = [](const std::optional<Rational>& q) {
    return q ? render::annotated(*q) : std::string("undefined");
  };
  for (const auto& [x, ev] : rows) {
    text << "x=" << x << ": f=" << render::annotated(ev.value)
         << " f*=" << render::annotated(ev.two_sided_sup)
         << " f_*=" << render::annotated(ev.two_sided_inf)
         << " left*=" << opt_text(ev.left_sup) << " left_*=" << opt_text(ev.left_inf)
         << " right*=" << opt_text(ev.right_sup)
         << " right_*=" << opt_text(ev.right_inf)
         << " osc=" << render::annotated(ev.oscillation) << "\n";
    csv << csv_cell(x) << "," << csv_cell(ev.value) << ","
        << csv_cell(ev.two_sided_sup) << "," << csv_cell(ev.two_sided_inf) << ","
        << opt_cell(ev.left_sup) << "," << opt_cell(ev.left_inf) << ","
        << opt_cell(ev.right_sup) << "," << opt_cell(ev.right_inf) << ","
        << csv_cell(ev.oscillation) << "\n";
  }
  return {text.str(), csv.str()};
}

ReportDocument analyze_report(const FunctionModel& f) {
  std::ostringstream text, csv;
  text << "analysis\n";
  describe_model(text, f);

  static constexpr PointProperty kProps[] = {
      PointProperty::Usc, PointProperty::Lsc, PointProperty::LeftCont,
      PointProperty::RightCont, PointProperty::Cont};

  csv << "property,failing_points,dense_failures_on_modified,dense_failures_on_unmodified\n";
  text << "exceptional points:\n";
  for (PointProperty prop : kProps) {
    ExceptionReport rep = exceptional_points(f, prop);
    text << "  " << point_property_name(prop) << ": ";
    csv << point_property_name(prop) << ",";
    if (rep.point_failures.empty()) {
      text << "no isolated failures";
    } else {
      text << "fails at";
      for (const auto& x : rep.point_failures) text << " " << x;
    }
    std::string pts;
    for (const auto& x : rep.point_failures) {
      if (!pts.empty()) pts += ";";
      pts += x.to_string();
    }
    csv << pts << ",";
    if (rep.dense) {
      text << "; dense " << dense_tag_name(rep.dense->tag) << " failures on "
           << render::interval_set(rep.dense->on_modified);
      if (!rep.dense->on_unmodified.is_empty())
        text << ", complement failures on "
             << render::interval_set(rep.dense->on_unmodified);
      csv << render::interval_set(rep.dense->on_modified) << ","
          << render::interval_set(rep.dense->on_unmodified);
    } else {
      csv << ",";
    }
    text << "\n";
    csv << "\n";
  }

  MeasurabilityCertificate cert = measurability_report(f);
  text << "measurability certificate:\n";
  text << "  base: " << cert.piece_count << " Borel piece"
       << (cert.piece_count == 1 ? "" : "s") << " glued at "
       << cert.breakpoint_count << " breakpoints\n";
  text << "  exception set: " << cert.exception_description() << "\n";
  text << "  conclusion: " << (cert.measurable ? "measurable" : "not measurable")
       << "\n";
  for (const auto& check : cert.spot_checks) {
    text << "  level set {f " << relation_name(check.rel) << " "
         << check.threshold << "}: measure " << render::enclosure(check.measure)
         << (check.measure_matches_base ? ", matches base" : ", differs from base")
         << "\n";
  }
  return {text.str(), csv.str()};
}

ReportDocument integrate_report(const FunctionModel& f, const Rational& tol,
                                int max_depth) {
  std::ostringstream text, csv;
  text << "integration (tol " << tol << ", max depth " << max_depth << ")\n";
  describe_model(text, f);
  DarbouxResult dr = darboux_integrals(f, tol, max_depth);
  Enclosure leb = lebesgue_integral(f, tol);
  text << "darboux lower: " << render::enclosure(dr.lower_integral) << "\n";
  text << "darboux upper: " << render::enclosure(dr.upper_integral) << "\n";
  text << "darboux gap: " << render::annotated(dr.gap) << " at depth "
       << dr.partition_depth << "\n";
  text << "lebesgue: " << render::enclosure(leb) << "\n";

  csv << "quantity,lo,hi,width,converged\n";
  auto row = [&](const char* name, const Enclosure& e) {
    csv << name << "," << e.bounds().lo() << "," << e.bounds().hi() << ","
        << e.width() << "," << render::yes_no(e.converged()) << "\n";
  };
  row("darboux_lower", dr.lower_integral);
  row("darboux_upper", dr.upper_integral);
  row("lebesgue", leb);
  return {text.str(), csv.str()};
}

ReportDocument compare_report_document(const FunctionModel& f, const Rational& tol,
                                       int max_depth) {
  std::ostringstream text, csv;
  text << "comparison (tol " << tol << ", max depth " << max_depth << ")\n";
  describe_model(text, f);
  ComparisonReport rep = compare_report(f, tol, max_depth);

  switch (rep.riemann_integrable) {
    case RiemannVerdict::Yes:
      text << "riemann: integrable, value " << render::enclosure(*rep.riemann_value)
           << "\n";
      break;
    case RiemannVerdict::No:
      text << "riemann: NOT integrable (gap=" << rep.darboux.gap << ")\n";
      break;
    case RiemannVerdict::UndecidedAtTolerance:
      text << "riemann: undecided at tolerance (gap=" << rep.darboux.gap << ")\n";
      break;
  }
  if (rep.lebesgue_value.is_exact())
    text << "lebesgue: " << rep.lebesgue_value.bounds().lo() << "\n";
  else
    text << "lebesgue: " << render::enclosure(rep.lebesgue_value) << "\n";
  if (rep.agree)
    text << "agree: " << render::yes_no(*rep.agree) << "\n";
  else
    text << "agree: not applicable\n";
  text << "oscillation evidence (measure of {oscillation >= eps}):\n";
  for (const auto& ob : rep.oscillation_evidence) {
    text << "  eps=" << ob.epsilon << ": " << render::enclosure(ob.measure_bound)
         << "\n";
  }

  csv << "quantity,lo,hi,width,converged\n";
  auto row = [&](const std::string& name, const Enclosure& e) {
    csv << name << "," << e.bounds().lo() << "," << e.bounds().hi() << ","
        << e.width() << "," << render::yes_no(e.converged()) << "\n";
  };
  row("darboux_lower", rep.darboux.lower_integral);
  row("darboux_upper", rep.darboux.upper_integral);
  if (rep.riemann_value) row("riemann", *rep.riemann_value);
  row("lebesgue", rep.lebesgue_value);
  for (const auto& ob : rep.oscillation_evidence)
    row("oscillation_ge_" + ob.epsilon.to_string(), ob.measure_bound);
  csv << "verdict," << riemann_verdict_name(rep.riemann_integrable) << ",,,\n";
  return {text.str(), csv.str()};
}

}  // namespace fnspect
