#pragma once

#include <string>

#include "rjc/bpoly.hpp"

namespace rjc {

/// Parses the expression grammar
///   expr     := ('+'|'-')? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nonneg-int)?
///   base     := rational | 'x' | 'y' | '(' expr ')'
///   rational := int ('/' posint)?
/// Whitespace is insignificant; implicit multiplication is rejected.
/// Throws ParseError with a 1-based column.
BPoly parse_poly(const std::string& text);

/// Canonical text form (see BPoly::to_string); parse_poly round-trips it.
std::string print_poly(const BPoly& p);

}  // namespace rjc
