#ifndef BIDEGREE_CHART_HPP
#define BIDEGREE_CHART_HPP

#include <set>
#include <string>

namespace bidegree {

/// Affine chart data: which variables are set to 1, which coordinate
/// hyperplanes form the boundary divisor, and which variables are known
/// nonzero away from it. invertibles always contains ones and boundary.
struct ChartSpec {
    std::set<std::string> ones;
    std::set<std::string> boundary;
    std::set<std::string> invertibles;

    static ChartSpec make(std::set<std::string> ones_, std::set<std::string> boundary_,
                          std::set<std::string> extra_invertibles = {}) {
        ChartSpec c;
        c.ones = std::move(ones_);
        c.boundary = std::move(boundary_);
        c.invertibles = std::move(extra_invertibles);
        c.invertibles.insert(c.ones.begin(), c.ones.end());
        c.invertibles.insert(c.boundary.begin(), c.boundary.end());
        return c;
    }
};

} // namespace bidegree

#endif
