#include "fnspect/function_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "fnspect/errors.hpp"

namespace fnspect {

bool dense_tag_contains(DenseTag tag, const Rational& x) {
  switch (tag) {
    case DenseTag::Rationals: return true;
    case DenseTag::Dyadics: return x.is_dyadic();
  }
  return false;
}

const char* dense_tag_name(DenseTag tag) {
  switch (tag) {
    case DenseTag::Rationals: return "rationals";
    case DenseTag::Dyadics: return "dyadics";
  }
  return "?";
}

CountableModification CountableModification::finite(std::vector<PointValue> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x))
      throw std::invalid_argument(
          "CountableModification: points must be strictly increasing");
  }
  CountableModification m;
  m.kind_ = Kind::Finite;
  m.points_ = std::move(points);
  return m;
}

CountableModification CountableModification::dense(DenseTag tag, Rational value) {
  CountableModification m;
  m.kind_ = Kind::SymbolicDense;
  m.tag_ = tag;
  m.dense_value_ = std::move(value);
  return m;
}

std::optional<Rational> CountableModification::value_at(const Rational& x) const {
  if (kind_ == Kind::SymbolicDense) {
    if (dense_tag_contains(tag_, x)) return dense_value_;
    return std::nullopt;
  }
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const PointValue& p, const Rational& v) {
                               return p.x < v;
                             });
  if (it != points_.end() && it->x == x) return it->value;
  return std::nullopt;
}

FunctionModel::FunctionModel(PiecewiseFunction base,
                             std::optional<CountableModification> modification)
    : base_(std::move(base)), modification_(std::move(modification)) {
  const auto& bp = base_.breakpoints;
  if (bp.size() < 2)
    throw std::invalid_argument("FunctionModel: need at least two breakpoints");
  for (std::size_t i = 1; i < bp.size(); ++i)
    if (!(bp[i - 1] < bp[i]))
      throw std::invalid_argument("FunctionModel: breakpoints must be strictly increasing");
  if (base_.pieces.size() != bp.size() - 1)
    throw std::invalid_argument("FunctionModel: piece count mismatch");
  if (base_.point_values.size() != bp.size())
    throw std::invalid_argument("FunctionModel: point value count mismatch");
  for (const auto& p : base_.pieces)
    if (p.degree() > kMaxPieceDegree)
      throw std::invalid_argument("FunctionModel: piece degree exceeds limit");
  if (modification_ &&
      modification_->kind() == CountableModification::Kind::Finite) {
    for (const auto& pv : modification_->points()) {
      if (pv.x < domain_lo() || domain_hi() < pv.x)
        throw std::invalid_argument(
            "FunctionModel: modification point outside domain");
    }
  }
}

void FunctionModel::check_domain(const Rational& x) const {
  if (!in_domain(x))
    throw DomainError("point " + x.to_string() + " outside domain [" +
                      domain_lo().to_string() + ", " + domain_hi().to_string() +
                      "]");
}

std::optional<int> FunctionModel::breakpoint_index(const Rational& x) const {
  const auto& bp = base_.breakpoints;
  auto it = std::lower_bound(bp.begin(), bp.end(), x);
  if (it != bp.end() && *it == x) return static_cast<int>(it - bp.begin());
  return std::nullopt;
}

Rational FunctionModel::evaluate(const Rational& x) const {
  check_domain(x);
  if (modification_) {
    if (auto v = modification_->value_at(x)) return *v;
  }
  if (auto idx = breakpoint_index(x)) return base_.point_values[static_cast<std::size_t>(*idx)];
  PieceLocation loc = piece_at(x);
  const PieceRef& ref = std::get<PieceRef>(loc);
  return (*ref.poly)(x);
}

PieceLocation FunctionModel::piece_at(const Rational& x) const {
  check_domain(x);
  if (auto idx = breakpoint_index(x)) return BreakpointRef{*idx};
  const auto& bp = base_.breakpoints;
  // First breakpoint strictly greater than x; x lies in the piece before it.
  auto it = std::upper_bound(bp.begin(), bp.end(), x);
  int i = static_cast<int>(it - bp.begin()) - 1;
  return PieceRef{i, &base_.pieces[static_cast<std::size_t>(i)],
                  Interval(bp[static_cast<std::size_t>(i)], bp[static_cast<std::size_t>(i) + 1])};
}

FunctionModel FunctionModel::without_modification() const {
  return FunctionModel(base_, std::nullopt);
}

FunctionModel FunctionModel::negated() const {
  PiecewiseFunction b;
  b.breakpoints = base_.breakpoints;
  for (const auto& p : base_.pieces) b.pieces.push_back(-p);
  for (const auto& v : base_.point_values) b.point_values.push_back(-v);
  std::optional<CountableModification> mod;
  if (modification_) {
    if (modification_->kind() == CountableModification::Kind::Finite) {
      std::vector<CountableModification::PointValue> pts;
      for (const auto& pv : modification_->points())
        pts.push_back({pv.x, -pv.value});
      mod = CountableModification::finite(std::move(pts));
    } else {
      mod = CountableModification::dense(modification_->tag(),
                                         -modification_->dense_value());
    }
  }
  return FunctionModel(std::move(b), std::move(mod));
}

}  // namespace fnspect
