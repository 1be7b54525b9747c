#ifndef BIDEGREE_PARSE_HPP
#define BIDEGREE_PARSE_HPP

#include <map>
#include <string>

#include "bidegree/poly.hpp"

namespace bidegree {

/// Environment of named polynomials usable as identifiers inside expressions
/// (file bindings refer to earlier bindings this way).
using ParseEnv = std::map<std::string, Poly>;

/// Expands `src` to canonical form. Grammar: integer and a/b rational
/// literals, identifiers, + - * ^,
/// parentheses, unary minus; `i` is the imaginary unit. Identifiers resolve
/// to declared variables first, then to `env` entries.
Poly parse_poly(const std::string& src, const VarTablePtr& vars,
                const ParseEnv& env = {});

} // namespace bidegree

#endif
