#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fnspect/interval.hpp"
#include "fnspect/polynomial.hpp"
#include "fnspect/rational.hpp"

namespace fnspect {

inline constexpr int kMaxPieceDegree = 12;

/// Countable dense subsets of the line with decidable membership for exact
/// rational inputs.
enum class DenseTag { Rationals, Dyadics };

bool dense_tag_contains(DenseTag tag, const Rational& x);
const char* dense_tag_name(DenseTag tag);

/// Replacement of a function's values on an at-most-countable set: either an
/// explicit finite list of (point, value) pairs or a symbolic dense set
/// (all rationals / all dyadic rationals) mapped to a single value.
class CountableModification {
public:
  enum class Kind { Finite, SymbolicDense };

  struct PointValue {
    Rational x;
    Rational value;
  };

  static CountableModification finite(std::vector<PointValue> points);
  static CountableModification dense(DenseTag tag, Rational value);

  Kind kind() const { return kind_; }
  const std::vector<PointValue>& points() const { return points_; }
  DenseTag tag() const { return tag_; }
  const Rational& dense_value() const { return dense_value_; }

  /// Value assigned at x, if x belongs to the modification set.
  std::optional<Rational> value_at(const Rational& x) const;

private:
  CountableModification() = default;
  Kind kind_ = Kind::Finite;
  std::vector<PointValue> points_;  // strictly increasing in x
  DenseTag tag_ = DenseTag::Rationals;
  Rational dense_value_;
};

/// Piecewise polynomial on a compact interval. Piece i governs the open
/// interval ]breakpoints[i], breakpoints[i+1][; the value at each breakpoint
/// is independent data.
struct PiecewiseFunction {
  std::vector<Rational> breakpoints;   // x0 < x1 < ... < xn, spans the domain
  std::vector<Polynomial> pieces;      // size n
  std::vector<Rational> point_values;  // size n+1

  const Rational& domain_lo() const { return breakpoints.front(); }
  const Rational& domain_hi() const { return breakpoints.back(); }
};

/// Location of a query point inside a piecewise function: either interior to
/// a piece or exactly at a breakpoint.
struct PieceRef {
  int index;
  const Polynomial* poly;
  Interval span;
};
struct BreakpointRef {
  int index;
};
using PieceLocation = std::variant<PieceRef, BreakpointRef>;

/// A piecewise polynomial plus an optional countable modification. Evaluation
/// semantics: the modification wins at its points; otherwise the breakpoint
/// value at breakpoints; otherwise the governing piece.
class FunctionModel {
public:
  FunctionModel(PiecewiseFunction base,
                std::optional<CountableModification> modification);

  const PiecewiseFunction& base() const { return base_; }
  const std::optional<CountableModification>& modification() const {
    return modification_;
  }

  const Rational& domain_lo() const { return base_.domain_lo(); }
  const Rational& domain_hi() const { return base_.domain_hi(); }
  Interval domain() const { return Interval(domain_lo(), domain_hi()); }
  bool in_domain(const Rational& x) const { return domain().contains(x); }

  int piece_count() const { return static_cast<int>(base_.pieces.size()); }
  int breakpoint_count() const { return static_cast<int>(base_.breakpoints.size()); }

  bool has_dense_modification() const {
    return modification_ &&
           modification_->kind() == CountableModification::Kind::SymbolicDense;
  }
  bool has_finite_modification() const {
    return modification_ &&
           modification_->kind() == CountableModification::Kind::Finite;
  }

  Rational evaluate(const Rational& x) const;
  PieceLocation piece_at(const Rational& x) const;

  /// Breakpoint index if x is a breakpoint.
  std::optional<int> breakpoint_index(const Rational& x) const;

  /// Model with the modification stripped (base only).
  FunctionModel without_modification() const;
  /// Model with every coefficient, point value, and modification value
  /// negated.
  FunctionModel negated() const;

private:
  void check_domain(const Rational& x) const;
  PiecewiseFunction base_;
  std::optional<CountableModification> modification_;
};

}  // namespace fnspect
