#ifndef BIDEGREE_POLYFILE_HPP
#define BIDEGREE_POLYFILE_HPP

#include <map>
#include <string>
#include <vector>

#include "bidegree/birat.hpp"
#include "bidegree/parse.hpp"

namespace bidegree {

/// Parsed polynomial file: a variable declaration, named bindings (later
/// bindings may reference earlier ones), and named ideals.
///
///   # comment
///   vars: y0:Y y1:Y x0:X x1:X t:P
///   q = y0*x0^2 + y1*x1^2
///   ideal axis: y0, x0, q
struct PolyFile {
    VarTablePtr table;
    std::vector<std::string> names;  // binding names in file order
    std::map<std::string, Poly> polys;
    std::map<std::string, std::vector<Poly>> ideals;

    const Poly& poly(const std::string& name) const;
    const std::vector<Poly>& ideal_gens(const std::string& name) const;
};

PolyFile parse_poly_file(const std::string& text);
PolyFile load_poly_file(const std::string& path);

/// Chart identity file. Directives (each on its own line, '#' comments):
///   source-vars: <name:grade list>        target-vars: <...> (optional)
///   let <name> = <expr>                   (binding over the source table)
///   target-let <name> = <expr>            (binding over the target table)
///   source = <expr>                       target = <expr>
///   source-dehom: a x3                    target-dehom: s1 z3
///   map <target var> = <expr> [| <denominator expr>]
///   cofactor = <expr> [| <denominator expr>]
///   source-ones: ...   source-boundary: ...
///   target-ones: ...   target-boundary: ...
/// Target variables left unmapped receive identity images when the source
/// table declares a variable of the same name.
ChartIdentity parse_chart_identity(const std::string& text);
ChartIdentity load_chart_identity(const std::string& path);

} // namespace bidegree

#endif
