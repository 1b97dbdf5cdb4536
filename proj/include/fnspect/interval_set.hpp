#pragma once

#include <vector>

#include "fnspect/interval.hpp"
#include "fnspect/rational.hpp"

namespace fnspect {

/// Finite disjoint union of intervals with endpoint openness flags. Carrier
/// for level sets and oscillation sets. Components are kept sorted by lo and
/// pairwise disjoint (adjacent components are merged whenever their union is
/// itself an interval).
class IntervalSet {
public:
  struct Component {
    Rational lo;
    bool lo_open = false;
    Rational hi;
    bool hi_open = false;

    bool is_singleton() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const;

    friend bool operator==(const Component& a, const Component& b) {
      return a.lo == b.lo && a.lo_open == b.lo_open && a.hi == b.hi &&
             a.hi_open == b.hi_open;
    }
  };

  IntervalSet() = default;

  /// Builds a set from arbitrary components, merging overlaps and touching
  /// endpoints. Degenerate open components (lo = hi with an open flag) are
  /// rejected.
  static IntervalSet normalized(std::vector<Component> components);

  /// Validating constructor for already-normalized data: throws
  /// std::invalid_argument if components are unsorted, overlapping, or empty.
  static IntervalSet from_components(std::vector<Component> components);

  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet singleton(const Rational& x) {
    return normalized({Component{x, false, x, false}});
  }

  const std::vector<Component>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }

  bool contains(const Rational& x) const;

  /// Exact Lebesgue measure: sum of component lengths. Openness flags do not
  /// affect the measure.
  Rational measure() const;

  static IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.components_ == b.components_;
  }

private:
  std::vector<Component> components_;
};

}  // namespace fnspect
