#include "bidegree/birat.hpp"

namespace bidegree {

namespace {

RatFunc push_through(const RatFunc& q, const std::map<std::string, RatFunc>& map,
                     const VarTablePtr& target) {
    return substitute_hom(q.num(), map, target) / substitute_hom(q.den(), map, target);
}

} // namespace

Certificate verify_chart_identity(const ChartIdentity& id) {
    if (id.cofactor.is_zero()) throw Error("chart identity cofactor must be nonzero");
    Certificate cert;
    cert.kind = "chart-identity";
    RatFunc image = substitute_hom(id.target, id.map, id.source.table());
    RatFunc expected = id.cofactor * RatFunc(id.source);
    if (image == expected) {
        cert.verdict = Verdict::Pass;
        cert.trace.push_back("substituted target equals cofactor * source exactly");
    } else {
        cert.verdict = Verdict::Fail;
        RatFunc diff = image - expected;
        Poly lead = Poly::monomial(diff.num().table(), diff.num().leading_monomial(),
                                   diff.num().leading_coeff());
        cert.failure = "difference has leading term " + lead.str() + " over denominator " +
                       diff.den().str();
    }
    return cert;
}

ChartIdentity compose(const ChartIdentity& inner, const ChartIdentity& outer) {
    // inner: target(mapI) = cI * source; outer: outer.target(mapO) = cO * inner.target
    ChartIdentity out;
    out.source = inner.source;
    out.target = outer.target;
    out.source_chart = inner.source_chart;
    out.target_chart = outer.target_chart;
    const VarTablePtr& t = inner.source.table();
    for (const auto& [v, img] : outer.map) out.map[v] = push_through(img, inner.map, t);
    out.cofactor = push_through(outer.cofactor, inner.map, t) * inner.cofactor;
    return out;
}

} // namespace bidegree
