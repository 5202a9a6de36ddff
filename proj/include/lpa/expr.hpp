#pragma once

// Element expressions (whitespace insensitive):
//
//   expr    := term (('+'|'-') term)*
//   term    := [coeff '*'] factors | coeff
//   factors := factor ('.' factor)*
//   factor  := identifier ['*']
//
// A '*' followed by the start of another word separates a coefficient from
// its factors; a '*' at the end of a factor is the adjoint. Compound
// coefficients are written in parentheses: "(1+i)*e1".

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/element.hpp"

namespace lpa {

class ExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses and normalizes. Throws ExprError for syntax errors, unknown
/// identifiers, malformed coefficients and adjacent factors whose ranges and
/// sources do not match ("invalid monomial").
Element parse_element(std::string_view text, const GraphPtr& graph, const FieldSpec& field);

/// "e1.e2.f2*.f1*"; a monomial on trivial paths prints as its vertex.
std::string format_monomial(const Graph& g, const Monomial& m);

/// Terms in canonical monomial order, "0" for zero.
std::string format_element(const Element& x);

}  // namespace lpa
