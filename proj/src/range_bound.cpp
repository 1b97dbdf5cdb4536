#include "fnspect/range_bound.hpp"

#include <stdexcept>

namespace fnspect {

namespace {

struct Accum {
  Rational outer_lo, outer_hi;   // hull of leaf Horner intervals
  Rational sample_lo, sample_hi; // extremes of exact point evaluations
  bool capped = false;
  bool first = true;

  void join_leaf(const Interval& horner, const Rational& v_lo,
                 const Rational& v_mid, const Rational& v_hi, bool hit_cap) {
    Rational smin = min(v_lo, min(v_mid, v_hi));
    Rational smax = max(v_lo, max(v_mid, v_hi));
    if (first) {
      outer_lo = horner.lo();
      outer_hi = horner.hi();
      sample_lo = smin;
      sample_hi = smax;
      first = false;
    } else {
      if (horner.lo() < outer_lo) outer_lo = horner.lo();
      if (outer_hi < horner.hi()) outer_hi = horner.hi();
      if (smin < sample_lo) sample_lo = smin;
      if (sample_hi < smax) sample_hi = smax;
    }
    capped = capped || hit_cap;
  }
};

void refine(const Polynomial& p, const Interval& window, const Rational& tol,
            int depth, int depth_cap, Accum& acc) {
  Interval horner = p.eval_interval(window);
  if (horner.width() <= tol || depth >= depth_cap) {
    Rational mid = window.midpoint();
    acc.join_leaf(horner, p(window.lo()), p(mid), p(window.hi()),
                  depth >= depth_cap && horner.width() > tol);
    return;
  }
  Rational mid = window.midpoint();
  refine(p, Interval(window.lo(), mid), tol, depth + 1, depth_cap, acc);
  refine(p, Interval(mid, window.hi()), tol, depth + 1, depth_cap, acc);
}

}  // namespace

RangePair range_enclosure(const Polynomial& p, const Interval& window,
                          const Rational& tol, int depth_cap) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("range_enclosure: tol must be positive");
  if (depth_cap < 0)
    throw std::invalid_argument("range_enclosure: negative depth cap");

  if (window.is_point()) {
    Rational v = p(window.lo());
    return RangePair{Enclosure::exact(v), Enclosure::exact(v)};
  }

  Accum acc;
  refine(p, window, tol, 0, depth_cap, acc);

  Enclosure sup(Interval(acc.sample_hi, acc.outer_hi),
                acc.outer_hi - acc.sample_hi <= tol);
  Enclosure inf(Interval(acc.outer_lo, acc.sample_lo),
                acc.sample_lo - acc.outer_lo <= tol);
  return RangePair{sup, inf};
}

}  // namespace fnspect
