#pragma once

#include <string_view>

#include "aspen/errors.hpp"
#include "aspen/program.hpp"

namespace aspen {

// Parses the rule language: `head :- lit1, ..., litn.` | `head.` | `:- lits.`
// Literals are atoms, `not` atoms, or builtin comparisons; `A..B` intervals
// (facts only) expand eagerly and `t+k` arguments desugar to PlusDef
// builtins. Throws SyntaxError, ArityMismatch, or UnsafeRule.
Program parse_program(std::string_view text);

// Parses one ground atom, canonicalizing its predicate spelling against the
// given program's symbol table.
Atom parse_ground_atom(std::string_view text, const Program& context);

}  // namespace aspen
