#pragma once

#include <string>
#include <string_view>

#include "hyperslice/regularity.hpp"

namespace hyperslice {

/// Parses the polynomial grammar
///   poly  := ['-'] term (('+'|'-') term)*
///   term  := [coeff] monos
///   monos := ('x' INDEX ['^' NAT])*
///   coeff := '(' real (basisname real)* ')'
/// e.g. "(0 i 1) x1^2 x2 + (1)". Reals may be decimals, exponents or p/q.
/// The arity is the largest variable index, or min_n if larger.
/// Throws SyntaxError (1-based line and column) and UnknownBasisName.
OrderedPolynomial parse_expression(std::string_view src, const Algebra& alg, int min_n = 0);

/// Canonical text accepted by parse_expression; terms in decreasing graded order.
std::string to_expression(const OrderedPolynomial& p);

/// Coefficient in the "(r name c ...)" form.
std::string coefficient_to_string(const ExactElement& a);

}  // namespace hyperslice
