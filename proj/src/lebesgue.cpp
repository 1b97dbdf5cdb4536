#include "fnspect/lebesgue.hpp"

#include <stdexcept>

#include "fnspect/range_bound.hpp"
#include "fnspect/scaled_grid.hpp"

namespace fnspect {

Interval value_bounds(const FunctionModel& f) {
  const auto& bp = f.base().breakpoints;
  bool first = true;
  Rational lo(0), hi(0);
  auto join = [&](const Rational& a, const Rational& b) {
    if (first) {
      lo = a;
      hi = b;
      first = false;
    } else {
      lo = min(lo, a);
      hi = max(hi, b);
    }
  };
  for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
    Interval span(bp[i], bp[i + 1]);
    RangePair rp = range_enclosure(f.base().pieces[i], span,
                                   max(span.width(), Rational(1)) / Rational(16));
    join(rp.inf.bounds().lo(), rp.sup.bounds().hi());
  }
  for (const auto& v : f.base().point_values) join(v, v);
  if (f.has_finite_modification()) {
    for (const auto& pv : f.modification()->points()) join(pv.value, pv.value);
  }
  if (f.has_dense_modification()) {
    const Rational& v = f.modification()->dense_value();
    join(v, v);
  }
  return Interval(lo, hi);
}

namespace {

// Largest integer i with  m + i*delta < value_num/value_den, then counted
// against a clamp range. Precomputed multipliers keep the per-cell work to a
// single multiply, subtract, and ceil-division.
struct LevelIndexer {
  // i < (N/D - m)/delta  <=>  i*V < N*A - B  with the constants below.
  mpz_class A, B, V;

  LevelIndexer(const mpz_class& poly_den, const Rational& m, const Rational& delta) {
    // (N/D - m)/delta = (N*md - D*mn)*dd / (D*md*dn)
    A = m.den() * delta.den();
    B = poly_den * m.num() * delta.den();
    V = poly_den * m.den() * delta.num();
  }

  // max{ i : i*V < N*A - B }, i.e. ceil((N*A - B)/V) - 1.
  void max_strict(const mpz_class& N, mpz_class& out) const {
    out = N * A - B;
    mpz_cdiv_q(out.get_mpz_t(), out.get_mpz_t(), V.get_mpz_t());
    out -= 1;
  }
};

unsigned long clamp_count(const mpz_class& bound_inclusive, unsigned long limit) {
  // #{ i in [1, limit] : i <= bound }
  if (bound_inclusive <= 0) return 0;
  if (bound_inclusive >= static_cast<long>(limit)) return limit;
  return bound_inclusive.get_ui();
}

struct PassResult {
  Rational lower, upper;  // enclosure of the layer-cake tail integral
};

// One simple-function pass with k levels t_i = m + i*delta and 2^depth grid
// cells per piece. For the non-increasing tail t -> mu({f > t}):
//   sum_{i=1..k} delta*mu(t_i)  <=  integral  <=  sum_{i=0..k-1} delta*mu(t_i)
// with each mu bracketed by full-cell and touched-cell widths.
PassResult level_pass(const FunctionModel& f, const Rational& m,
                      const Rational& delta, unsigned long k, int depth) {
  const auto& bp = f.base().breakpoints;
  PassResult out{Rational(0), Rational(0)};
  mpz_class nlo, nhi, bound;
  const unsigned long cells = 1UL << depth;

  for (std::size_t pi = 0; pi < f.base().pieces.size(); ++pi) {
    Rational alpha = bp[pi];
    Rational cell_w = (bp[pi + 1] - bp[pi]) / Rational(static_cast<long>(cells));
    ScaledGridPoly grid(f.base().pieces[pi], alpha, cell_w);
    LevelIndexer indexer(grid.denom(), m, delta);

    // Sum of per-cell level counts; multiplied out by delta*cell_w at the end.
    mpz_class full_counts(0), touch_counts(0);
    for (unsigned long j = 0; j < cells; ++j) {
      grid.eval_interval(j, j + 1, nlo, nhi);
      // Cell lies inside {f > t_i} for every i <= max_strict(nlo); it can
      // touch {f > t_i} only for i <= max_strict(nhi).
      indexer.max_strict(nlo, bound);
      full_counts += clamp_count(bound, k);  // levels i in [1, k]
      indexer.max_strict(nhi, bound);
      bound += 1;  // levels i in [0, k-1]: count = bound+1 clamped
      if (bound > 0)
        touch_counts += bound >= static_cast<long>(k) ? k : bound.get_ui();
    }
    out.lower += delta * cell_w * Rational::from_mpz(full_counts);
    out.upper += delta * cell_w * Rational::from_mpz(touch_counts);
  }
  return out;
}

}  // namespace

Enclosure lebesgue_integral(const FunctionModel& f, const Rational& tol) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("lebesgue_integral: tol must be positive");

  const Rational domain_len = f.domain_hi() - f.domain_lo();
  Interval bounds = value_bounds(f);
  const Rational& m = bounds.lo();
  if (bounds.is_point()) {
    // Constant almost everywhere: countable deviations carry no mass.
    return Enclosure::exact(m * domain_len);
  }
  const Rational span = bounds.width();
  const Rational base = m * domain_len;

  constexpr unsigned long kMaxLevels = 1UL << 24;
  unsigned long k = 8;
  PassResult pass{Rational(0), Rational(0)};
  while (true) {
    Rational delta = span / Rational(static_cast<long>(k));
    int depth = 1;
    while ((1UL << depth) < 2 * k && depth < 26) ++depth;
    pass = level_pass(f, m, delta, k, depth);
    if (pass.upper - pass.lower <= tol) break;
    if (k >= kMaxLevels)
      return Enclosure(Interval(base + pass.lower, base + pass.upper), false);
    k *= 2;
  }
  return Enclosure(Interval(base + pass.lower, base + pass.upper), true);
}

}  // namespace fnspect
