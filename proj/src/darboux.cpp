#include "fnspect/darboux.hpp"

#include <algorithm>
#include <stdexcept>

#include "fnspect/range_bound.hpp"
#include "fnspect/scaled_grid.hpp"

namespace fnspect {

namespace {

// Per-cell bounds of f over a closed cell, as four one-sided quantities:
// certified and attained bounds of inf and sup. Consults piece ranges over
// the cell parts, f's values at breakpoints and finite modification points in
// the cell, and the dense value when present. Piece ranges come from the
// supplied callback so darboux_sums can use the adaptive range engine while
// the dyadic ladder stays on plain interval Horner.
struct CellBounds {
  Rational inf_lo, inf_hi, sup_lo, sup_hi;
};

template <typename PartRange>
CellBounds cell_bounds(const FunctionModel& f, const Rational& u,
                       const Rational& w, PartRange&& part_range) {
  const auto& bp = f.base().breakpoints;
  bool first = true;
  CellBounds cb;
  auto join = [&](const Rational& ilo, const Rational& ihi, const Rational& slo,
                  const Rational& shi) {
    if (first) {
      cb.inf_lo = ilo;
      cb.inf_hi = ihi;
      cb.sup_lo = slo;
      cb.sup_hi = shi;
      first = false;
    } else {
      cb.inf_lo = min(cb.inf_lo, ilo);
      cb.inf_hi = min(cb.inf_hi, ihi);
      cb.sup_lo = max(cb.sup_lo, slo);
      cb.sup_hi = max(cb.sup_hi, shi);
    }
  };

  for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
    Rational plo = max(u, bp[i]);
    Rational phi = min(w, bp[i + 1]);
    if (!(plo < phi)) continue;  // open piece interval contributes no interior
    RangePair rp = part_range(f.base().pieces[i], Interval(plo, phi));
    join(rp.inf.bounds().lo(), rp.inf.bounds().hi(), rp.sup.bounds().lo(),
         rp.sup.bounds().hi());
  }
  // Breakpoints inside the closed cell contribute f's actual value there.
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (u <= bp[i] && bp[i] <= w) {
      Rational v = f.evaluate(bp[i]);
      join(v, v, v, v);
    }
  }
  if (f.has_finite_modification()) {
    const auto& pts = f.modification()->points();
    auto it = std::lower_bound(
        pts.begin(), pts.end(), u,
        [](const CountableModification::PointValue& pv, const Rational& v) {
          return pv.x < v;
        });
    for (; it != pts.end() && it->x <= w; ++it)
      join(it->value, it->value, it->value, it->value);
  }
  if (f.has_dense_modification()) {
    const Rational& v = f.modification()->dense_value();
    join(v, v, v, v);
  }
  return cb;
}

// Plain interval Horner plus endpoint/midpoint evaluations: the
// inclusion-isotone range used by the dyadic ladder.
RangePair plain_range(const Polynomial& p, const Interval& window) {
  Interval horner = p.eval_interval(window);
  Rational v_lo = p(window.lo());
  Rational v_hi = p(window.hi());
  Rational v_mid = p(window.midpoint());
  Rational smin = min(v_lo, min(v_mid, v_hi));
  Rational smax = max(v_lo, max(v_mid, v_hi));
  return RangePair{Enclosure(Interval(smax, horner.hi()), true),
                   Enclosure(Interval(horner.lo(), smin), true)};
}

}  // namespace

std::pair<Enclosure, Enclosure> darboux_sums(const FunctionModel& f,
                                             const std::vector<Rational>& partition,
                                             const Rational& tol) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("darboux_sums: tol must be positive");
  if (partition.size() < 2)
    throw std::invalid_argument("darboux_sums: partition needs two points");
  for (std::size_t i = 1; i < partition.size(); ++i)
    if (!(partition[i - 1] < partition[i]))
      throw std::invalid_argument("darboux_sums: partition must be strictly increasing");
  if (partition.front() != f.domain_lo() || partition.back() != f.domain_hi())
    throw std::invalid_argument("darboux_sums: partition must span the domain");

  auto ranged = [&](const Polynomial& p, const Interval& part) {
    return range_enclosure(p, part, tol);
  };
  Rational lower_lo(0), lower_hi(0), upper_lo(0), upper_hi(0);
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
    const Rational& u = partition[i];
    const Rational& w = partition[i + 1];
    Rational width = w - u;
    CellBounds cb = cell_bounds(f, u, w, ranged);
    lower_lo += width * cb.inf_lo;
    lower_hi += width * cb.inf_hi;
    upper_lo += width * cb.sup_lo;
    upper_hi += width * cb.sup_hi;
  }
  Enclosure lower(Interval(lower_lo, lower_hi), lower_hi - lower_lo <= tol);
  Enclosure upper(Interval(upper_lo, upper_hi), upper_hi - upper_lo <= tol);
  return {lower, upper};
}

namespace {

// Indices of cells whose closed hull touches a breakpoint or finite
// modification point, sorted. Everything else runs on the fast path.
std::vector<unsigned long> special_cell_indices(const FunctionModel& f,
                                                unsigned long n,
                                                const Rational& cell_w) {
  std::vector<Rational> specials = f.base().breakpoints;
  if (f.has_finite_modification())
    for (const auto& pv : f.modification()->points()) specials.push_back(pv.x);

  std::vector<unsigned long> cells;
  const Rational& a = f.domain_lo();
  for (const auto& s : specials) {
    Rational pos = (s - a) / cell_w;
    mpz_class fl = pos.floor();
    long j = fl.get_si();
    if (pos.is_integer()) {
      if (j >= 1) cells.push_back(static_cast<unsigned long>(j - 1));
      if (j >= 0 && static_cast<unsigned long>(j) < n)
        cells.push_back(static_cast<unsigned long>(j));
    } else if (j >= 0 && static_cast<unsigned long>(j) < n) {
      cells.push_back(static_cast<unsigned long>(j));
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

}  // namespace

DyadicDepthSums dyadic_depth_sums(const FunctionModel& f, int depth) {
  if (depth < 1 || depth > 62)
    throw std::invalid_argument("dyadic_depth_sums: depth out of range");
  const Rational& a = f.domain_lo();
  const Rational& b = f.domain_hi();
  const unsigned long n = 1UL << depth;
  const Rational cell_w = (b - a) / Rational(static_cast<long>(n));

  const bool dense = f.has_dense_modification();
  const Rational dense_v = dense ? f.modification()->dense_value() : Rational(0);

  std::vector<unsigned long> special_cells = special_cell_indices(f, n, cell_w);

  DyadicDepthSums out{Rational(0), Rational(0), Rational(0), Rational(0)};

  // Fast path: runs of non-special cells inside each piece, on the
  // scaled-integer grid (bit-exact with the rational interval Horner).
  const auto& bp = f.base().breakpoints;
  mpz_class nlo, nhi, pj, pj1, nlo_s, nhi_s;
  for (std::size_t pi = 0; pi < f.base().pieces.size(); ++pi) {
    Rational qlo = (bp[pi] - a) / cell_w;
    Rational qhi = (bp[pi + 1] - a) / cell_w;
    mpz_class j_start_z = qlo.floor() + 1;
    mpz_class j_end_z = qhi.is_integer() ? qhi.floor() - 2 : qhi.floor() - 1;
    if (j_end_z < j_start_z) continue;
    unsigned long j_start = j_start_z.get_ui();
    unsigned long j_end = j_end_z.get_ui();

    ScaledGridPoly grid(f.base().pieces[pi], a, cell_w);
    const mpz_class& d = grid.denom();
    // Accumulate in units of 1/(d * vd); vd = 1 without a dense value.
    const mpz_class vd = dense ? mpz_class(dense_v.den()) : mpz_class(1);
    const mpz_class vnum_scaled = dense ? mpz_class(dense_v.num() * d) : mpz_class(0);

    mpz_class acc_lower_f(0), acc_upper_f(0), acc_low_env(0), acc_high_env(0);

    auto next_special = std::lower_bound(special_cells.begin(), special_cells.end(),
                                         j_start);
    unsigned long run_start = j_start;
    while (run_start <= j_end) {
      unsigned long run_end = j_end;
      bool stop_at_special =
          next_special != special_cells.end() && *next_special <= j_end;
      if (stop_at_special) run_end = *next_special - 1;

      if (run_start <= run_end && run_end != static_cast<unsigned long>(-1)) {
        bool have_prev = false;
        for (unsigned long j = run_start; j <= run_end; ++j) {
          grid.eval_interval(j, j + 1, nlo, nhi);
          if (have_prev)
            mpz_swap(pj.get_mpz_t(), pj1.get_mpz_t());
          else
            grid.eval(j, pj);
          grid.eval(j + 1, pj1);
          have_prev = true;

          if (!dense) {
            acc_lower_f += nlo;
            acc_upper_f += nhi;
            acc_low_env += nhi;
            acc_high_env += nlo;
          } else {
            // Rescale by vd to share a denominator with the dense value.
            nlo_s = nlo * vd;
            nhi_s = nhi * vd;
            acc_lower_f += nlo_s <= vnum_scaled ? nlo_s : vnum_scaled;
            acc_upper_f += nhi_s >= vnum_scaled ? nhi_s : vnum_scaled;
            // sup of min(p, v) is min(sup p, v); inf of max(p, v) likewise.
            acc_low_env += nhi_s <= vnum_scaled ? nhi_s : vnum_scaled;
            acc_high_env += nlo_s >= vnum_scaled ? nlo_s : vnum_scaled;
          }
        }
      }

      if (!stop_at_special) break;
      run_start = *next_special + 1;
      ++next_special;
    }

    Rational unit = cell_w / Rational(d * vd, mpz_class(1));
    out.lower_sum_bound += unit * Rational::from_mpz(acc_lower_f);
    out.upper_sum_bound += unit * Rational::from_mpz(acc_upper_f);
    out.low_envelope_hi += unit * Rational::from_mpz(acc_low_env);
    out.high_envelope_lo += unit * Rational::from_mpz(acc_high_env);
  }

  // Slow path: cells touching special points, with plain Horner per part so
  // the certified sides stay inclusion-isotone across depths.
  auto plain = [](const Polynomial& p, const Interval& part) {
    return plain_range(p, part);
  };
  for (unsigned long j : special_cells) {
    Rational u = a + cell_w * Rational(static_cast<long>(j));
    Rational w = j + 1 == n ? b : a + cell_w * Rational(static_cast<long>(j + 1));
    CellBounds cb = cell_bounds(f, u, w, plain);
    out.lower_sum_bound += cell_w * cb.inf_lo;
    out.upper_sum_bound += cell_w * cb.sup_hi;

    // Envelope sums ignore isolated point values: only piece ranges and the
    // dense value participate.
    bool first = true;
    Rational env_sup_hi(0), env_inf_lo(0);
    for (std::size_t pi = 0; pi < f.base().pieces.size(); ++pi) {
      Rational plo = max(u, bp[pi]);
      Rational phi = min(w, bp[pi + 1]);
      if (!(plo < phi)) continue;
      Interval horner = f.base().pieces[pi].eval_interval(Interval(plo, phi));
      Rational part_sup = horner.hi();
      Rational part_inf = horner.lo();
      if (dense) {
        part_sup = min(part_sup, dense_v);
        part_inf = max(part_inf, dense_v);
      }
      if (first) {
        env_sup_hi = part_sup;
        env_inf_lo = part_inf;
        first = false;
      } else {
        env_sup_hi = max(env_sup_hi, part_sup);
        env_inf_lo = min(env_inf_lo, part_inf);
      }
    }
    out.low_envelope_hi += cell_w * env_sup_hi;
    out.high_envelope_lo += cell_w * env_inf_lo;
  }
  return out;
}

DarbouxResult darboux_integrals(const FunctionModel& f, const Rational& tol,
                                int max_depth) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("darboux_integrals: tol must be positive");
  if (max_depth < 1)
    throw std::invalid_argument("darboux_integrals: max_depth must be >= 1");

  DarbouxResult result;
  for (int k = 1; k <= max_depth; ++k) {
    DyadicDepthSums s = dyadic_depth_sums(f, k);

    // The true lower Darboux integral equals the integral of the lower
    // envelope min(pieces, dense value): any lower sum of f sits below it and
    // any upper sum of the envelope above it; symmetrically for the upper
    // integral.
    Enclosure lower(Interval(s.lower_sum_bound, s.low_envelope_hi),
                    s.low_envelope_hi - s.lower_sum_bound <= tol);
    Enclosure upper(Interval(s.high_envelope_lo, s.upper_sum_bound),
                    s.upper_sum_bound - s.high_envelope_lo <= tol);
    result.lower_integral = lower;
    result.upper_integral = upper;
    result.gap = upper.bounds().hi() - lower.bounds().lo();
    result.partition_depth = k;
    if (lower.converged() && upper.converged()) break;
  }
  return result;
}

}  // namespace fnspect
