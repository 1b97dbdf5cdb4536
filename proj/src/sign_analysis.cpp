#include "fnspect/sign_analysis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fnspect {

namespace {

// Scale by a positive rational so coefficients become a primitive integer
// vector. Signs are preserved everywhere, which is all Sturm chains need.
Polynomial primitive_scale(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& c : p.coeffs()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    den_lcm = l;
  }
  for (const auto& c : p.coeffs()) {
    mpz_class scaled_num = c.num() * (den_lcm / c.den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return p;
  Rational factor(den_lcm, num_gcd);
  return p * factor;
}

struct SturmChain {
  std::vector<Polynomial> seq;

  int variations(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& p : seq) {
      int s = p(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }
};

SturmChain build_sturm(const Polynomial& s) {
  SturmChain chain;
  chain.seq.push_back(primitive_scale(s));
  Polynomial d = primitive_scale(s.derivative());
  if (!d.is_zero()) chain.seq.push_back(d);
  while (chain.seq.size() >= 2 && !chain.seq.back().is_zero()) {
    const Polynomial& a = chain.seq[chain.seq.size() - 2];
    const Polynomial& b = chain.seq.back();
    Polynomial r = a.rem(b);
    if (r.is_zero()) break;
    chain.seq.push_back(primitive_scale(-r));
  }
  return chain;
}

// Deflates all factors (x - r) out of s; returns how many were removed.
int deflate_at(Polynomial& s, const Rational& r) {
  int removed = 0;
  Polynomial lin({-r, Rational(1)});
  while (!s.is_zero() && s(r).is_zero()) {
    s = s.exact_div(lin);
    ++removed;
  }
  return removed;
}

struct Bracket {
  Rational lo, hi;
};

// Bisects [lo, hi] (sign change of s across it) until width <= tol or an
// exact root surfaces at a midpoint. Returns true with `point` set when the
// root came out exactly.
bool refine_bracket(const Polynomial& s, Rational& lo, Rational& hi,
                    const Rational& tol, Rational& point) {
  int sign_lo = s(lo).sign();
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    int sm = s(mid).sign();
    if (sm == 0) {
      point = mid;
      return true;
    }
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  // Try to recover a rational root: the simplest rational in the bracket is
  // the root itself once the bracket is narrow enough.
  Rational candidate = simplest_rational_in(lo, hi);
  if (lo < candidate && candidate < hi && s(candidate).is_zero()) {
    point = candidate;
    return true;
  }
  return false;
}

// Shrinks the bracket until it strictly excludes x (which is not a root of
// s). A bisection midpoint may land exactly on the bracket's own root, in
// which case the root is returned instead.
std::optional<Rational> exclude_point(const Polynomial& s, Rational& lo,
                                      Rational& hi, const Rational& x) {
  int sign_lo = s(lo).sign();
  while (lo <= x && x <= hi) {
    Rational mid = (lo + hi) / Rational(2);
    int sm = s(mid).sign();
    if (sm == 0) return mid;
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return std::nullopt;
}

}  // namespace

std::vector<RootLocation> isolate_roots(const Polynomial& q, const Rational& lo,
                                        const Rational& hi, const Rational& tol) {
  if (q.is_zero())
    throw std::invalid_argument("isolate_roots: zero polynomial");
  if (tol.sign() <= 0)
    throw std::invalid_argument("isolate_roots: tol must be positive");

  std::vector<RootLocation> exact_roots;
  if (hi <= lo) return exact_roots;

  Polynomial s = q.squarefree_part();
  if (s.degree() <= 0) return exact_roots;

  // Roots at the window edges are not interior roots; remove them so Sturm
  // counts over [lo, hi] are clean.
  deflate_at(s, lo);
  deflate_at(s, hi);

  std::vector<Bracket> brackets;
  bool restart = true;
  while (restart) {
    restart = false;
    brackets.clear();
    if (s.degree() <= 0) break;
    SturmChain chain = build_sturm(s);
    int v_lo = chain.variations(lo);
    std::deque<std::tuple<Rational, Rational, int>> work;
    work.emplace_back(lo, hi, v_lo - chain.variations(hi));
    while (!work.empty()) {
      auto [l, u, n] = work.front();
      work.pop_front();
      if (n <= 0) continue;
      Rational mid = (l + u) / Rational(2);
      if (s(mid).is_zero()) {
        exact_roots.push_back(RootLocation{true, mid, Rational(0), Rational(0)});
        deflate_at(s, mid);
        restart = true;
        break;
      }
      if (n == 1) {
        brackets.push_back(Bracket{l, u});
        continue;
      }
      int vm = chain.variations(mid);
      work.emplace_back(l, mid, chain.variations(l) - vm);
      work.emplace_back(mid, u, vm - chain.variations(u));
    }
  }

  std::vector<RootLocation> roots = exact_roots;
  for (auto& b : brackets) {
    Rational point(0);
    if (refine_bracket(s, b.lo, b.hi, tol, point)) {
      roots.push_back(RootLocation{true, point, Rational(0), Rational(0)});
      continue;
    }
    // Keep brackets strictly clear of exact roots so region boundaries stay
    // separated.
    std::optional<Rational> late_exact;
    for (const auto& r : exact_roots) {
      if (b.lo <= r.point && r.point <= b.hi) {
        late_exact = exclude_point(s, b.lo, b.hi, r.point);
        if (late_exact) break;
      }
    }
    if (late_exact) {
      roots.push_back(RootLocation{true, *late_exact, Rational(0), Rational(0)});
      continue;
    }
    roots.push_back(RootLocation{false, Rational(0), b.lo, b.hi});
  }

  std::sort(roots.begin(), roots.end(), [](const RootLocation& a, const RootLocation& b) {
    Rational ka = a.exact ? a.point : a.bracket_lo;
    Rational kb = b.exact ? b.point : b.bracket_lo;
    return ka < kb;
  });
  return roots;
}

namespace {

struct Negated {
  RelationEx rel;
  bool negate_poly;
};

Negated canonicalize(RelationEx rel) {
  switch (rel) {
    case RelationEx::LT: return {RelationEx::GT, true};
    case RelationEx::LE: return {RelationEx::GE, true};
    default: return {rel, false};
  }
}

}  // namespace

SignRegions polynomial_relation_regions(const Polynomial& q_in, RelationEx rel_in,
                                        const Interval& span, const Rational& tol) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("polynomial_relation_regions: tol must be positive");
  SignRegions out;
  if (span.is_point()) return out;  // open interval is empty

  auto [rel, negate] = canonicalize(rel_in);
  Polynomial q = negate ? -q_in : q_in;

  const Rational& a = span.lo();
  const Rational& b = span.hi();

  if (q.is_zero()) {
    switch (rel) {
      case RelationEx::GE:
      case RelationEx::EQ:
        out.set = IntervalSet::normalized({{a, true, b, true}});
        break;
      default:
        break;  // GT / NE of identically-zero polynomial: empty
    }
    return out;
  }

  std::vector<RootLocation> roots = isolate_roots(q, a, b, tol);

  // Edges of the no-root gaps between consecutive boundary objects.
  std::vector<Rational> gap_left{a}, gap_right;
  for (const auto& r : roots) {
    gap_right.push_back(r.exact ? r.point : r.bracket_lo);
    gap_left.push_back(r.exact ? r.point : r.bracket_hi);
  }
  gap_right.push_back(b);

  std::vector<IntervalSet::Component> comps;
  auto boundary_rep = [](const RootLocation& r) { return r.representative(); };

  // Segment i runs from boundary i-1 to boundary i (with the span edges at
  // the ends). Signs are sampled strictly inside the root-free gaps.
  const std::size_t nseg = roots.size() + 1;
  for (std::size_t i = 0; i < nseg; ++i) {
    const Rational& gl = gap_left[i];
    const Rational& gr = gap_right[i];
    if (gr <= gl) continue;  // degenerate segment (bracket touches span edge)
    int sign = q((gl + gr) / Rational(2)).sign();
    if (sign == 0)
      throw std::logic_error("polynomial_relation_regions: zero sample sign");

    bool wanted = false;
    switch (rel) {
      case RelationEx::GT:
      case RelationEx::GE: wanted = sign > 0; break;
      case RelationEx::NE: wanted = true; break;
      case RelationEx::EQ: wanted = false; break;
      default: throw std::logic_error("unreachable relation");
    }
    if (!wanted) continue;

    // Component endpoints: span edges stay open; exact roots are open (the
    // root itself is handled separately); bracket boundaries sit at the
    // representative point, open, with the bracket recorded.
    Rational clo = a;
    bool clo_open = true;
    if (i > 0) {
      const RootLocation& left = roots[i - 1];
      clo = boundary_rep(left);
      clo_open = true;
    }
    Rational chi = b;
    bool chi_open = true;
    if (i < roots.size()) {
      const RootLocation& right = roots[i];
      chi = boundary_rep(right);
      chi_open = true;
    }
    if (chi <= clo) continue;
    comps.push_back({clo, clo_open, chi, chi_open});
  }

  // Exact roots join GE and EQ sets as singletons.
  if (rel == RelationEx::GE || rel == RelationEx::EQ) {
    for (const auto& r : roots) {
      if (r.exact) comps.push_back({r.point, false, r.point, false});
    }
  }

  for (const auto& r : roots) {
    if (!r.exact) {
      out.boundaries.emplace_back(Interval(r.bracket_lo, r.bracket_hi),
                                  r.bracket_hi - r.bracket_lo <= tol);
      // EQ at an unresolved root: the measure-zero point is somewhere in the
      // bracket; represent it at the midpoint.
      if (rel == RelationEx::EQ)
        comps.push_back({r.representative(), false, r.representative(), false});
    }
  }

  out.set = IntervalSet::normalized(std::move(comps));
  return out;
}

}  // namespace fnspect
