#ifndef TRW_FAMILY_DSL_HPP
#define TRW_FAMILY_DSL_HPP

#include <string>
#include <vector>

#include "trw/families.hpp"
#include "trw/multiparam.hpp"

namespace trw {

// Parses a family definition document:
//
//   name: <identifier>
//   params: <id> (, <id>)*          (1 or 2 parameters)
//   poly: <expr>
//   range <id>: <int>..<int>        (optional, one per parameter)
//
// Expressions follow
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := ("-")? atom ("^" nat)?
//   atom   := nat | "x" | identifier | "(" expr ")"
// with no implicit multiplication and arbitrary-precision integers.
//
// One document defines exactly one family.  Malformed input raises
// SyntaxError with 1-based line/column and the expected token; a
// well-formed polynomial that breaks the family hypotheses (non-monic,
// constant term not ±1, no nonconstant middle coefficient) raises
// HypothesisViolation.  Parameters without an explicit range get [-10, 10].
ParamFamily parse_family(const std::string& text);

// Parses a single polynomial expression over the given parameters (the
// grammar's expr rule).  Used for polynomial literals on the command line.
ParamXPoly parse_poly_expr(const std::string& text, const std::vector<std::string>& params);

}  // namespace trw

#endif
