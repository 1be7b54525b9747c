#ifndef BIDEGREE_FAMILIES_HPP
#define BIDEGREE_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bidegree/certificate.hpp"
#include "bidegree/chart.hpp"
#include "bidegree/poly.hpp"

namespace bidegree {

enum class FamilyVariant { DoubleCone, DegreeRaise, Kuechle, ThreeTwo, CubicReduction };

struct FamilyParams {
    int n = 0, r = 0;    // ambient P^(n-r) x P^(r+1) when known
    int d = 0, f = 0;    // seed bidegree (taken from the seed if left 0)
    int d2 = 0, f2 = 0;  // target bidegree for DegreeRaise
};

/// Extra inputs beyond the main seed G.
struct FamilySeeds {
    Poly G;
    std::optional<Poly> H;                    // DegreeRaise target
    std::optional<Poly> cubic, M, L;          // CubicReduction data
};

struct DegenerationFamily {
    FamilyVariant variant;
    FamilyParams params;
    Poly seed;
    std::vector<Poly> eqs;  // {F, H}; DegreeRaise: {t*H - G*F}; CubicReduction: {X, Q'}
    Poly component0, component1;  // special-fiber components
    Poly intersection;            // Z / V (zero when not applicable)
    std::string coord_a, coord_b, param;
    ChartSpec boundary;
    std::string regime;  // which ambient-dimension hypothesis the run assumes

    const VarTablePtr& table() const { return eqs.front().table(); }
};

/// Constructs the named degeneration with exact equations over the seed's
/// variable table (which must already declare the auxiliary coordinates and
/// the parameter). extra_boundary widens the default boundary divisor.
DegenerationFamily build_family(FamilyVariant variant, FamilyParams params,
                                const FamilySeeds& seeds,
                                std::set<std::string> extra_boundary = {});

/// Degree-1 test in the distinguished variable: writes the hypersurface as
/// Q + P*v and certifies that a boundary Y-variable and a boundary
/// X-variable both divide P.
Certificate ch1_hypothesis_check(const Poly& hypersurface,
                                 const std::string& distinguished_var,
                                 const ChartSpec& boundary);

struct FiberSplit {
    Poly y0_component, y1_component, intersection;
    Certificate cert;
};

/// Verifies the parameter=0 fiber factors through the declared components
/// and that the total-space equation restricts onto each of them.
FiberSplit special_fiber_split(const DegenerationFamily& family);

} // namespace bidegree

#endif
