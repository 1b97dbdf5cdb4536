#pragma once

// Randomized corpus of piecewise polynomial models. Domains stay inside
// [-1/2, 1/2] so the derivative bound sum(i * |c_i| * (1/2)^(i-1)) <= 375
// keeps the pinned sampling-oracle tolerances (eps = 2^-20, error budget
// 2^-10) certifiably satisfiable.

#include <random>
#include <set>
#include <vector>

#include "fnspect/function_model.hpp"

namespace fnspect::testgen {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_num = 100, long max_den = 100) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Distinct sorted abscissas in [-1/2, 1/2] with moderate denominators.
inline std::vector<Rational> random_breakpoints(Rng& rng, int count) {
  std::set<Rational> points;
  std::uniform_int_distribution<long> den(2, 64);
  while (static_cast<int>(points.size()) < count) {
    long d = den(rng);
    std::uniform_int_distribution<long> num(-d / 2, d / 2);
    points.insert(Rational(num(rng), d));
  }
  return {points.begin(), points.end()};
}

inline Polynomial random_piece(Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng));
  return Polynomial(std::move(coeffs));
}

inline FunctionModel random_model(Rng& rng, int max_pieces = 8, int max_degree = 6) {
  std::uniform_int_distribution<int> npieces(1, max_pieces);
  int n = npieces(rng);
  PiecewiseFunction base;
  base.breakpoints = random_breakpoints(rng, n + 1);
  for (int i = 0; i < n; ++i) base.pieces.push_back(random_piece(rng, max_degree));
  for (int i = 0; i <= n; ++i) base.point_values.push_back(random_rational(rng));
  return FunctionModel(std::move(base), std::nullopt);
}

// The same base with a finite modification at `count` distinct random
// rational points of the domain.
inline FunctionModel with_random_finite_modification(Rng& rng,
                                                     const FunctionModel& f,
                                                     int count) {
  std::set<Rational> xs;
  const Rational lo = f.domain_lo();
  const Rational span = f.domain_hi() - f.domain_lo();
  std::uniform_int_distribution<long> den(1, 8192);
  while (static_cast<int>(xs.size()) < count) {
    long d = den(rng);
    std::uniform_int_distribution<long> num(0, d);
    xs.insert(lo + span * Rational(num(rng), d));
  }
  std::vector<CountableModification::PointValue> points;
  for (const auto& x : xs) points.push_back({x, random_rational(rng)});
  return FunctionModel(f.base(), CountableModification::finite(std::move(points)));
}

// Random query point inside the domain (never outside; may hit breakpoints).
inline Rational random_domain_point(Rng& rng, const FunctionModel& f) {
  std::uniform_int_distribution<long> den(1, 4096);
  long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  return f.domain_lo() + (f.domain_hi() - f.domain_lo()) * Rational(num(rng), d);
}

}  // namespace fnspect::testgen
