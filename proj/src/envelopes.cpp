#include "fnspect/envelopes.hpp"

#include <algorithm>
#include <stdexcept>

#include "fnspect/errors.hpp"

namespace fnspect {

const char* point_property_name(PointProperty p) {
  switch (p) {
    case PointProperty::Usc: return "usc";
    case PointProperty::Lsc: return "lsc";
    case PointProperty::LeftCont: return "left-continuous";
    case PointProperty::RightCont: return "right-continuous";
    case PointProperty::Cont: return "continuous";
  }
  return "?";
}

bool property_holds(const PointClass& pc, PointProperty prop) {
  switch (prop) {
    case PointProperty::Usc: return pc.is_usc;
    case PointProperty::Lsc: return pc.is_lsc;
    case PointProperty::LeftCont: return pc.is_left_cont;
    case PointProperty::RightCont: return pc.is_right_cont;
    case PointProperty::Cont: return pc.is_cont;
  }
  return false;
}

namespace {

// One-sided polynomial limit at x: the adjacent piece evaluated at x. For a
// breakpoint this is the neighbouring piece on the requested side; for an
// interior point it is the governing piece itself.
Rational adjacent_piece_limit(const FunctionModel& f, const Rational& x, Side side) {
  PieceLocation loc = f.piece_at(x);
  if (const auto* bp = std::get_if<BreakpointRef>(&loc)) {
    int i = bp->index;
    int piece = side == Side::Left ? i - 1 : i;
    return f.base().pieces[static_cast<std::size_t>(piece)](x);
  }
  const PieceRef& ref = std::get<PieceRef>(loc);
  return (*ref.poly)(x);
}

}  // namespace

std::optional<std::pair<Rational, Rational>> one_sided_limits(
    const FunctionModel& f, const Rational& x, Side side) {
  if (!f.in_domain(x))
    throw DomainError("point " + x.to_string() + " outside domain");
  if (side == Side::Left && x == f.domain_lo()) return std::nullopt;
  if (side == Side::Right && x == f.domain_hi()) return std::nullopt;

  Rational limit = adjacent_piece_limit(f, x, side);
  Rational sup = limit, inf = limit;
  if (f.has_dense_modification()) {
    const Rational& v = f.modification()->dense_value();
    sup = max(sup, v);
    inf = min(inf, v);
  }
  return std::make_pair(sup, inf);
}

std::pair<Rational, Rational> two_sided_limits(const FunctionModel& f,
                                               const Rational& x) {
  Rational own = f.evaluate(x);  // also validates the domain
  Rational sup = own, inf = own;
  for (Side side : {Side::Left, Side::Right}) {
    if (auto one = one_sided_limits(f, x, side)) {
      sup = max(sup, one->first);
      inf = min(inf, one->second);
    }
  }
  return {sup, inf};
}

EnvelopeValues envelope_values(const FunctionModel& f, const Rational& x) {
  EnvelopeValues ev;
  ev.value = f.evaluate(x);
  auto [sup, inf] = two_sided_limits(f, x);
  ev.two_sided_sup = sup;
  ev.two_sided_inf = inf;
  if (auto l = one_sided_limits(f, x, Side::Left)) {
    ev.left_sup = l->first;
    ev.left_inf = l->second;
  }
  if (auto r = one_sided_limits(f, x, Side::Right)) {
    ev.right_sup = r->first;
    ev.right_inf = r->second;
  }
  ev.oscillation = ev.two_sided_sup - ev.two_sided_inf;
  return ev;
}

PointClass classify_point(const FunctionModel& f, const Rational& x) {
  EnvelopeValues ev = envelope_values(f, x);
  PointClass pc;
  pc.is_usc = ev.two_sided_sup == ev.value;
  pc.is_lsc = ev.two_sided_inf == ev.value;
  pc.is_left_cont = !ev.left_sup ||
                    (*ev.left_sup == ev.value && *ev.left_inf == ev.value);
  pc.is_right_cont = !ev.right_sup ||
                     (*ev.right_sup == ev.value && *ev.right_inf == ev.value);
  pc.is_cont = pc.is_usc && pc.is_lsc;
  return pc;
}

std::vector<std::pair<Rational, EnvelopeValues>> envelope_table(
    const FunctionModel& f, const std::vector<Rational>& grid) {
  for (const auto& x : grid) {
    if (!f.in_domain(x))
      throw DomainError("grid point " + x.to_string() + " outside domain");
  }
  std::vector<std::pair<Rational, EnvelopeValues>> rows;
  rows.reserve(grid.size());
  for (const auto& x : grid) rows.emplace_back(x, envelope_values(f, x));
  return rows;
}

namespace {

// Failure of `prop` at a point with base value p(x) and actual value v
// (dense-modified), or actual value p(x) with a dense value v nearby
// (unmodified), reduces to a polynomial sign condition on p - v.
RelationEx modified_failure_relation(PointProperty prop) {
  switch (prop) {
    case PointProperty::Usc: return RelationEx::GT;  // p(x) > v
    case PointProperty::Lsc: return RelationEx::LT;  // p(x) < v
    default: return RelationEx::NE;                  // p(x) != v
  }
}

RelationEx unmodified_failure_relation(PointProperty prop) {
  switch (prop) {
    case PointProperty::Usc: return RelationEx::LT;  // p(x) < v
    case PointProperty::Lsc: return RelationEx::GT;  // p(x) > v
    default: return RelationEx::NE;
  }
}

}  // namespace

ExceptionReport exceptional_points(const FunctionModel& f, PointProperty prop,
                                   const Rational& tol) {
  ExceptionReport report;
  report.property = prop;

  const bool dense = f.has_dense_modification();
  DenseTag tag = dense ? f.modification()->tag() : DenseTag::Rationals;

  // Candidate exact points: breakpoints and finite modification points. With
  // a dense modification, members of the dense set are attributed to the
  // symbolic report instead.
  std::vector<Rational> candidates = f.base().breakpoints;
  if (f.has_finite_modification()) {
    for (const auto& pv : f.modification()->points()) candidates.push_back(pv.x);
  }
  for (const auto& x : candidates) {
    if (dense && dense_tag_contains(tag, x)) continue;
    if (!property_holds(classify_point(f, x), prop)) {
      if (report.point_failures.empty() || report.point_failures.back() != x)
        report.point_failures.push_back(x);
    }
  }
  std::sort(report.point_failures.begin(), report.point_failures.end());
  report.point_failures.erase(
      std::unique(report.point_failures.begin(), report.point_failures.end()),
      report.point_failures.end());

  if (dense) {
    const Rational& v = f.modification()->dense_value();
    DenseFailureRegions regions;
    regions.tag = tag;
    regions.value = v;
    for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
      Interval span(f.base().breakpoints[i], f.base().breakpoints[i + 1]);
      Polynomial q = f.base().pieces[i] - v;
      SignRegions on_mod = polynomial_relation_regions(
          q, modified_failure_relation(prop), span, tol);
      SignRegions on_unmod = polynomial_relation_regions(
          q, unmodified_failure_relation(prop), span, tol);
      regions.on_modified = IntervalSet::set_union(regions.on_modified, on_mod.set);
      regions.on_unmodified =
          IntervalSet::set_union(regions.on_unmodified, on_unmod.set);
      for (auto& b : on_mod.boundaries) regions.boundaries.push_back(b);
      for (auto& b : on_unmod.boundaries) regions.boundaries.push_back(b);
    }
    if (!regions.on_modified.is_empty() || !regions.on_unmodified.is_empty())
      report.dense = std::move(regions);
  }
  return report;
}

}  // namespace fnspect
