#pragma once

// Surface syntax for scalars, multivectors and forms.
//
//   sum     := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] primary)*
//   primary := number | p/q | var | d/d<var> | d<var>
//            | (exp|sin|cos|ln) '(' sum ')' | '(' sum ')'
//
// '^' raises a scalar to an integer power, takes the wedge power of a graded
// element when the right side is an integer, and is the wedge product
// otherwise. '*' multiplies by a scalar. Decimals are read as exact rationals.

#include <optional>
#include <string>
#include <string_view>

#include "gvk/alg.hpp"

namespace gvk {

/// Position of the first character of `text` inside its source file.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

Expr parse_scalar(std::string_view text, const ChartPtr& chart, SourcePos at = {});

/// A scalar parses as grade 0; the literal 0 becomes the zero of `grade`.
/// With `grade` set, any other grade is a ParseError.
MultiVector parse_multivector(std::string_view text, const ChartPtr& chart,
                              std::optional<int> grade = std::nullopt, SourcePos at = {});
DiffForm parse_form(std::string_view text, const ChartPtr& chart,
                    std::optional<int> grade = std::nullopt, SourcePos at = {});

/// Names usable as chart variables in the surface syntax: identifiers that
/// are not function names and do not read as the differential of another
/// variable. Throws ParseError at `at` otherwise.
void validate_chart_names(const Chart& chart, SourcePos at = {});

}  // namespace gvk
