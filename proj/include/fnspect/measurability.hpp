#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fnspect/function_model.hpp"
#include "fnspect/level_set.hpp"

namespace fnspect {

/// One sampled level set, checked for the certified shape (interval union
/// adjusted by countable point sets) and cross-validated against the
/// unmodified base function.
struct LevelSpotCheck {
  Rational threshold;
  Relation rel;
  Enclosure measure;
  bool measure_matches_base;  // exact equality with the unmodified model
};

/// Executable measurability argument: the base piecewise function is Borel
/// (finitely many polynomial pieces glued at finitely many points), the
/// modification set is at most countable, hence the model is
/// Borel-measurable. Spot checks sample level sets to exhibit the structure.
struct MeasurabilityCertificate {
  int piece_count = 0;
  int breakpoint_count = 0;

  enum class ModKind { None, Finite, Dense } mod_kind = ModKind::None;
  std::size_t finite_exception_count = 0;       // when ModKind::Finite
  std::optional<DenseTag> dense_tag;            // when ModKind::Dense

  bool measurable = false;
  std::vector<LevelSpotCheck> spot_checks;

  std::string exception_description() const;
};

MeasurabilityCertificate measurability_report(const FunctionModel& f,
                                              int spot_check_count = 5);

}  // namespace fnspect
