#ifndef BIDEGREE_BIRAT_HPP
#define BIDEGREE_BIRAT_HPP

#include <map>

#include "bidegree/certificate.hpp"
#include "bidegree/chart.hpp"
#include "bidegree/ratfunc.hpp"

namespace bidegree {

/// Claim that two chart equations agree under a coordinate substitution up
/// to a nonzero cofactor: target(map(vars)) = cofactor * source.
struct ChartIdentity {
    Poly source;
    Poly target;
    std::map<std::string, RatFunc> map;  // target variable -> source expression
    RatFunc cofactor;
    ChartSpec source_chart, target_chart;
};

/// Exact cross-multiplied verification of the identity above.
Certificate verify_chart_identity(const ChartIdentity& id);

/// Composite of two verified identities A -> B -> C: the map is the
/// substitution of outer images into the inner map, the cofactor the
/// matching product.
ChartIdentity compose(const ChartIdentity& inner, const ChartIdentity& outer);

} // namespace bidegree

#endif
