#pragma once

#include <string>

#include "fnspect/function_model.hpp"

namespace fnspect {

/// Parses the line-oriented function-spec grammar:
///
///   domain <lo> <hi>
///   breakpoints <x0> <x1> ... <xn>
///   piece <i> coeffs <c0> <c1> ...
///   values <v0> ... <vn>
///   modify finite (<x>,<v>) ...
///   modify dense rationals <v>
///   modify dense dyadics <v>
///
/// Numerals are integers or p/q fractions; `#` starts a comment. Throws
/// SpecError with 1-based line/column on any syntax or semantic violation.
FunctionModel parse_spec(const std::string& text);

/// Canonical spec document for a model; parse_spec(print_spec(f)) is
/// extensionally equal to f.
std::string print_spec(const FunctionModel& f);

}  // namespace fnspect
