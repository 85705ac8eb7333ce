#pragma once

#include "cremona/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace cremona {

// Parse a polynomial expression over cyclotomic constants.
//
// Grammar: + - * / ^ ( ), integer literals, and symbols. Division is only
// allowed by constant subexpressions; exponents are nonnegative integers.
// Built-in symbols: i (the imaginary unit), eps<N> / zeta<N> (primitive N-th
// root of unity), sqrt(<integer>). All other identifiers must appear in
// `vars`, which maps the name to a variable index in a ring with `nvars`
// variables.
MultiPoly parse_poly(const std::string& text,
                     const std::map<std::string, int>& vars, int nvars);

// Parse a constant expression (no variables allowed).
CycloNumber parse_scalar(const std::string& text);

// Interpret slot expressions as a linear substitution matrix.
// slots[r] is an expression in the names of `vars` that must be homogeneous
// linear; returns M with M[r][c] = coefficient of variable c in slot r.
std::vector<std::vector<CycloNumber>> linear_map_matrix(
    const std::vector<std::string>& slots,
    const std::vector<std::string>& var_names);

}  // namespace cremona
