#pragma once
/* Canonical polynomial text syntax.
 *
 * Grammar:   expr   := ['-'] term (('+'|'-') term)*
 *            term   := factor ('*' factor)*
 *            factor := base ['^' uint]
 *            base   := uint ['/' uint] | var | '(' expr ')'
 *
 * '/' only joins two integer literals (a field constant).  Printing uses
 * degrevlex order, leading term first, and always reparses to the same
 * polynomial: e.g. "3*x^2*y - 1/2".
 */

#include <string>

#include "foliate/lex.hpp"
#include "foliate/poly.hpp"

namespace foliate {

/* Parse an expression from an open lexer (used inside command scripts). */
Poly parse_poly_expr(Lexer& lx, const RingPtr& ring);

/* Parse a complete string; trailing tokens are an error. */
Poly parse_poly(const std::string& text, const RingPtr& ring);

std::string print_poly(const Poly& p);

std::string print_coeff(const mpq_class& c);

}  // namespace foliate
