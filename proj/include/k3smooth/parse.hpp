#pragma once

#include <string>
#include <vector>

#include "k3smooth/polynomial.hpp"

namespace k3smooth {

/**
 * Parses the polynomial grammar
 *
 *   expr     := term (('+'|'-') term)*
 *   term     := factor ('*'? factor)*
 *   factor   := rational | variable ('^' uint)? | '(' expr ')'
 *   rational := int ('/' uint)?
 *
 * with insignificant whitespace, juxtaposition as multiplication and an
 * optional leading sign. Throws InputError with a 1-based character
 * position on bad syntax, unknown variables, decimal literals and zero
 * denominators.
 */
Polynomial parse_polynomial(const std::string& text, RingPtr ring = default_ring());

// Comma-separated list of polynomials (commas inside parentheses do not
// split). Empty entries are rejected.
std::vector<Polynomial> parse_generator_list(const std::string& text,
                                             RingPtr ring = default_ring());

}  // namespace k3smooth
