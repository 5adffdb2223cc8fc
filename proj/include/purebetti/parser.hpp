#ifndef PUREBETTI_PARSER_HPP
#define PUREBETTI_PARSER_HPP

#include <string_view>
#include <vector>

#include "purebetti/oracle.hpp"

namespace purebetti {

/*
 * Parses a homogeneous polynomial in n variables.
 *
 *   poly   := [+|-] term { (+|-) term }
 *   term   := factor { [*] factor }      (juxtaposition only before a variable)
 *   factor := (integer [/ integer] | variable) [^ integer]
 *   variable := x1 .. x9 | x | y | z | w | u | v   (letters name x1..x6)
 *
 * Throws SyntaxError (with position), UnknownVariable, InhomogeneousPolynomial
 * or ZeroPolynomial.
 */
HomogeneousPolynomial parse_polynomial(std::string_view text, int n);

/// Comma-separated generator list, e.g. "x1*x2, x2*x3, x1^2 - x2^2".
std::vector<HomogeneousPolynomial> parse_generators(std::string_view text, int n);

}  // namespace purebetti

#endif
