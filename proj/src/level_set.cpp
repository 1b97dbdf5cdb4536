#include "fnspect/level_set.hpp"

#include <stdexcept>

namespace fnspect {

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::GT: return ">";
    case Relation::GE: return ">=";
    case Relation::LT: return "<";
    case Relation::LE: return "<=";
  }
  return "?";
}

bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::GT: return lhs > rhs;
    case Relation::GE: return lhs >= rhs;
    case Relation::LT: return lhs < rhs;
    case Relation::LE: return lhs <= rhs;
  }
  return false;
}

namespace {

RelationEx to_ex(Relation rel) {
  switch (rel) {
    case Relation::GT: return RelationEx::GT;
    case Relation::GE: return RelationEx::GE;
    case Relation::LT: return RelationEx::LT;
    case Relation::LE: return RelationEx::LE;
  }
  return RelationEx::GT;
}

}  // namespace

LevelSet level_set(const FunctionModel& f, const Rational& c, Relation rel,
                   const Rational& tol) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("level_set: tol must be positive");

  LevelSet out;
  std::vector<IntervalSet::Component> comps;

  const auto& bp = f.base().breakpoints;
  for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
    Interval span(bp[i], bp[i + 1]);
    Polynomial q = f.base().pieces[i] - c;
    SignRegions regions = polynomial_relation_regions(q, to_ex(rel), span, tol);
    for (const auto& comp : regions.set.components()) comps.push_back(comp);
    for (const auto& b : regions.boundaries) out.boundary_enclosures.push_back(b);
  }

  // Breakpoints enter through their own values (modifications handled below).
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (relation_holds(f.base().point_values[i], rel, c))
      comps.push_back({bp[i], false, bp[i], false});
  }

  out.base_set = IntervalSet::normalized(std::move(comps));

  if (f.has_finite_modification()) {
    for (const auto& pv : f.modification()->points()) {
      bool qualifies = relation_holds(pv.value, rel, c);
      bool inside = out.base_set.contains(pv.x);
      if (qualifies && !inside) out.added_points.finite.push_back(pv.x);
      if (!qualifies && inside) out.removed_points.finite.push_back(pv.x);
    }
  } else if (f.has_dense_modification()) {
    if (relation_holds(f.modification()->dense_value(), rel, c))
      out.added_points.dense = f.modification()->tag();
    else
      out.removed_points.dense = f.modification()->tag();
  }
  return out;
}

Enclosure level_measure(const LevelSet& ls) {
  Rational base = ls.base_set.measure();
  // Each unresolved boundary may shift the true edge anywhere within its
  // bracket; the represented edge sits at the bracket midpoint.
  Rational slack(0);
  bool converged = true;
  for (const auto& b : ls.boundary_enclosures) {
    Rational rep = b.bounds().midpoint();
    slack += max(rep - b.bounds().lo(), b.bounds().hi() - rep);
    converged = converged && b.converged();
  }
  Rational lo = base - slack;
  if (lo.sign() < 0) lo = Rational(0);
  return Enclosure(Interval(lo, base + slack), converged);
}

}  // namespace fnspect
