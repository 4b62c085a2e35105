#pragma once

#include "symhermite/polynomial.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace symhermite {

// Grammar (whitespace insensitive):
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { '*' factor }
//   factor  := primary [ '^' integer ]
//   primary := rational | identifier | '(' expr ')'
//   rational:= integer [ '/' integer ]
// No implicit multiplication; identifiers must name a variable of `vars`,
// possibly through `aliases` (alias -> canonical name).
Polynomial parse_polynomial(const std::string& text, const VariableSet& vars,
                            const std::map<std::string, std::string>& aliases = {});

// Terms in descending term order (leading term first), monomial factors in
// variable-list order, '*' between factors, " + "/" - " between terms.
// Canonical: render(parse(render(p))) == render(p).
std::string render(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace symhermite
