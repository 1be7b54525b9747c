#ifndef BIDEGREE_GEOMCHECK_HPP
#define BIDEGREE_GEOMCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "bidegree/certificate.hpp"
#include "bidegree/chart.hpp"
#include "bidegree/families.hpp"
#include "bidegree/groebner.hpp"
#include "bidegree/unipoly.hpp"

namespace bidegree {

/// v^2 + b*v + c with b, c free of the variable.
struct MonicQuadratic {
    std::string variable;
    Poly b, c;
};

using Matrix = std::vector<std::vector<Poly>>;

Matrix jacobian_matrix(const std::vector<Poly>& eqs, const std::vector<std::string>& vars);
Poly det_minor(const Matrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols);

/// Sufficient unit criterion: a single term whose variables are all known
/// invertible on the chart. Anything else is false.
bool unit_off_boundary(const Poly& p, const ChartSpec& chart);

/// Normalizes a chart equation of degree 2 in `var` to a monic quadratic.
/// A nontrivial leading coefficient A is absorbed by the substitution
/// v = A*var, which leaves the discriminant B^2 - 4AC intact.
MonicQuadratic extract_monic_quadratic(const Poly& eq, const std::string& var);

Poly discriminant(const MonicQuadratic& q);

struct SquareTestResult {
    enum class Kind { Square, OddDegree, CoefficientMismatch, OddMultiplicityFactor };
    Kind kind;
    UniPoly witness;     // square root when kind == Square
    std::string detail;  // forced coefficients / offending factor

    bool is_square() const { return kind == Kind::Square; }
};

/// Exact square test for p univariate in `variable` over the parameter
/// field. Non-squarefree input goes through the squarefree decomposition
/// (odd-multiplicity report); squarefree input through top-down coefficient
/// matching.
SquareTestResult univariate_square_test(const Poly& p, const std::string& variable);

/// One-sided irreducibility certificate: specializes the discriminant of the
/// chart equation (quadratic in quad_var) along spec_map and refutes
/// squareness. A square specialization is inconclusive, never a Pass.
Certificate integrality_refutation(const Poly& family_eq, const ChartSpec& chart,
                                   const std::string& quad_var,
                                   const std::map<std::string, Poly>& spec_map);

/// Jacobian-rank semistability on one chart: declared 2x2 minor, special
/// fiber splitting, and per-component (plus optional intersection) partials
/// must all be boundary units.
Certificate semistability_check(const DegenerationFamily& family, const ChartSpec& chart,
                                const std::pair<std::string, std::string>& minor_cols,
                                const std::vector<std::pair<int, std::string>>& component_partials,
                                const std::optional<std::string>& intersection_partial = {});

/// The hypersurface and all its partials lie in every given ideal.
Certificate conic_singularity_check(const Poly& q, const std::vector<Ideal>& conics,
                                    const Limits& limits = {});

/// Chart-by-chart radical membership of h in the Jacobian ideal of q.
Certificate singular_in_hyperplanes(const Poly& q, const Poly& h,
                                    const std::vector<ChartSpec>& charts,
                                    const Limits& limits = {});

} // namespace bidegree

#endif
