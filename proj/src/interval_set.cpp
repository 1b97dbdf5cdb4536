#include "fnspect/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace fnspect {

bool IntervalSet::Component::contains(const Rational& x) const {
  if (x < lo || hi < x) return false;
  if (x == lo && lo_open) return false;
  if (x == hi && hi_open) return false;
  return true;
}

namespace {

void check_component(const IntervalSet::Component& c) {
  if (c.hi < c.lo) throw std::invalid_argument("IntervalSet: component with hi < lo");
  if (c.lo == c.hi && (c.lo_open || c.hi_open))
    throw std::invalid_argument("IntervalSet: empty component (degenerate open)");
}

// True when a and b overlap or touch in a way that makes their union an
// interval. Assumes a.lo <= b.lo.
bool mergeable(const IntervalSet::Component& a, const IntervalSet::Component& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return !(a.hi_open && b.lo_open);
  return false;
}

}  // namespace

IntervalSet IntervalSet::normalized(std::vector<Component> components) {
  for (const auto& c : components) check_component(c);
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              // Closed start sorts first so merging sweeps see it first.
              if (a.lo_open != b.lo_open) return !a.lo_open;
              return a.hi < b.hi;
            });
  std::vector<Component> out;
  for (auto& c : components) {
    if (!out.empty() && mergeable(out.back(), c)) {
      Component& prev = out.back();
      if (c.hi > prev.hi) {
        prev.hi = c.hi;
        prev.hi_open = c.hi_open;
      } else if (c.hi == prev.hi && !c.hi_open) {
        prev.hi_open = false;
      }
      if (c.lo == prev.lo && !c.lo_open) prev.lo_open = false;
    } else {
      out.push_back(std::move(c));
    }
  }
  IntervalSet s;
  s.components_ = std::move(out);
  return s;
}

IntervalSet IntervalSet::from_components(std::vector<Component> components) {
  for (const auto& c : components) check_component(c);
  for (std::size_t i = 1; i < components.size(); ++i) {
    const Component& a = components[i - 1];
    const Component& b = components[i];
    if (b.lo < a.lo) throw std::invalid_argument("IntervalSet: components unsorted");
    if (mergeable(a, b))
      throw std::invalid_argument("IntervalSet: components overlap or touch");
  }
  IntervalSet s;
  s.components_ = std::move(components);
  return s;
}

bool IntervalSet::contains(const Rational& x) const {
  // Binary search over sorted disjoint components.
  std::size_t lo = 0, hi = components_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (components_[mid].hi < x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < components_.size() && components_[lo].contains(x);
}

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const auto& c : components_) total += c.length();
  return total;
}

IntervalSet IntervalSet::set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Component> all = a.components_;
  all.insert(all.end(), b.components_.begin(), b.components_.end());
  return normalized(std::move(all));
}

}  // namespace fnspect
