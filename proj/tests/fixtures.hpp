#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include "bidegree/parse.hpp"

namespace fixtures {

using namespace bidegree;

// bihomogeneous (2,2) quadric with singular locus along six conics
inline const char* kQuadric =
    "y1*y2*x0^2 + y0*y2*x1^2 + y0*y1*x2^2 + "
    "(y0^2+y1^2+y2^2-2*(y0*y1+y0*y2+y1*y2))*x3^2";

// (3,2) seed obtained from the quadric by the cone and square-absorption
// steps; lives in P^5 x P^3 coordinates with parameter t
inline const char* kCubicSeed =
    "y1^2*(y2+a)*x0^2 + y0*y2*y1*x1^2 + a*y0*(a-t*y0)*X2^2 + "
    "y1*(y0^2+y1^2+y2^2-2*(y0*y1+y0*y2+y1*y2))*x3^2";

inline VarTablePtr quadric_table() {
    return VarTable::make({{"y0", Grade::Y},
                           {"y1", Grade::Y},
                           {"y2", Grade::Y},
                           {"x0", Grade::X},
                           {"x1", Grade::X},
                           {"x2", Grade::X},
                           {"x3", Grade::X}});
}

// quadric coordinates plus the double-cone auxiliaries a, b and parameter t
inline VarTablePtr cone_table() {
    return VarTable::make({{"y0", Grade::Y},
                           {"y1", Grade::Y},
                           {"y2", Grade::Y},
                           {"a", Grade::Y},
                           {"b", Grade::Y},
                           {"x0", Grade::X},
                           {"x1", Grade::X},
                           {"x2", Grade::X},
                           {"x3", Grade::X},
                           {"t", Grade::Param}});
}

// coordinates for the (3,2) degeneration: c, d auxiliaries, parameters t, s
inline VarTablePtr threetwo_table() {
    return VarTable::make({{"y0", Grade::Y},
                           {"y1", Grade::Y},
                           {"y2", Grade::Y},
                           {"a", Grade::Y},
                           {"c", Grade::Y},
                           {"d", Grade::Y},
                           {"x0", Grade::X},
                           {"x1", Grade::X},
                           {"X2", Grade::X},
                           {"x3", Grade::X},
                           {"t", Grade::Param},
                           {"s", Grade::Param}});
}

inline Poly quadric(const VarTablePtr& t) { return parse_poly(kQuadric, t); }
inline Poly cubic_seed(const VarTablePtr& t) { return parse_poly(kCubicSeed, t); }

} // namespace fixtures

#endif
