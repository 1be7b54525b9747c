#include "bidegree/geomcheck.hpp"

namespace bidegree {

Matrix jacobian_matrix(const std::vector<Poly>& eqs, const std::vector<std::string>& vars) {
    Matrix m;
    for (const auto& e : eqs) {
        std::vector<Poly> row;
        for (const auto& v : vars) row.push_back(e.derivative(v));
        m.push_back(std::move(row));
    }
    return m;
}

Poly det_minor(const Matrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw IndexOutOfRange("minor is not square");
    for (std::size_t r : rows)
        if (r >= m.size()) throw IndexOutOfRange("row " + std::to_string(r));
    for (std::size_t c : cols)
        for (std::size_t r : rows)
            if (c >= m[r].size()) throw IndexOutOfRange("column " + std::to_string(c));
    if (rows.empty()) throw IndexOutOfRange("empty minor");

    const VarTablePtr& t = m[rows[0]][cols[0]].table();
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    // cofactor expansion along the first selected row
    Poly det = Poly::zero(t);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> subcols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) subcols.push_back(cols[j]);
        Poly term = m[rows[0]][cols[k]] * det_minor(m, subrows, subcols);
        if (k % 2) det -= term;
        else det += term;
    }
    return det;
}

bool unit_off_boundary(const Poly& p, const ChartSpec& chart) {
    if (p.is_zero() || p.num_terms() != 1) return false;
    for (const auto& v : p.support_vars())
        if (!chart.invertibles.count(v)) return false;
    return true;
}

MonicQuadratic extract_monic_quadratic(const Poly& eq, const std::string& var) {
    if (eq.degree_in(var) != 2)
        throw NotMonicQuadratic("degree in " + var + " is " +
                                std::to_string(eq.degree_in(var)));
    Poly a = eq.coeff_of_power(var, 2);
    Poly b = eq.coeff_of_power(var, 1);
    Poly c = eq.coeff_of_power(var, 0);
    if (a == Poly::constant(eq.table(), GaussRat(1))) return {var, b, c};
    return {var, b, a * c};
}

Poly discriminant(const MonicQuadratic& q) {
    return q.b * q.b - GaussRat(4) * q.c;
}

SquareTestResult univariate_square_test(const Poly& p, const std::string& variable) {
    const VarTablePtr& t = p.table();
    for (const auto& v : p.support_vars())
        if (v != variable && t->grade(t->index(v)) != Grade::Param)
            throw NotUnivariate("variable " + v + " is not a parameter");

    UniPoly u = unipoly_from(p, variable);
    if (u.is_zero())
        return {SquareTestResult::Kind::Square, UniPoly::zero(t), "zero polynomial"};
    // a polynomial over a polynomial ring is a square over the fraction field
    // iff it is a square outright (Gauss), so try the direct root first and
    // keep the factor analysis for explaining failures
    if (auto root = poly_sqrt(p))
        return {SquareTestResult::Kind::Square, unipoly_from(*root, variable), ""};
    int n = u.degree();
    if (n % 2)
        return {SquareTestResult::Kind::OddDegree, UniPoly::zero(t),
                "degree " + std::to_string(n) + " is odd"};

    UniPoly g = gcd(u, u.derivative());
    if (g.degree() > 0) {
        // repeated factors: read the multiplicities off the decomposition
        std::vector<UniPoly> parts = squarefree_decomposition(u);
        UniPoly odd = UniPoly::constant(RatFunc::constant(t, GaussRat(1)));
        for (std::size_t i = 0; i < parts.size(); ++i)
            if ((i + 1) % 2) odd = odd * parts[i];
        if (odd.degree() > 0)
            return {SquareTestResult::Kind::OddMultiplicityFactor, UniPoly::zero(t),
                    "odd multiplicity of " + odd.str(variable)};
        auto lc = ratfunc_sqrt(u.lead());
        if (!lc)
            return {SquareTestResult::Kind::CoefficientMismatch, UniPoly::zero(t),
                    "leading unit " + u.lead().str() + " is not a square"};
        UniPoly w = UniPoly::constant(*lc);
        for (std::size_t i = 0; i < parts.size(); ++i)
            w = w * parts[i].pow(static_cast<unsigned>(i + 1) / 2);
        if (w * w == u) return {SquareTestResult::Kind::Square, w, ""};
        return {SquareTestResult::Kind::CoefficientMismatch, UniPoly::zero(t),
                "even-multiplicity reassembly does not reproduce the input"};
    }

    // squarefree: the square root is forced top-down
    std::size_t m = static_cast<std::size_t>(n) / 2;
    auto top = ratfunc_sqrt(u.lead());
    if (!top)
        return {SquareTestResult::Kind::CoefficientMismatch, UniPoly::zero(t),
                "leading coefficient " + u.lead().str() + " is not a square"};
    std::vector<RatFunc> r(m + 1, RatFunc(Poly::zero(t)));
    r[m] = *top;
    RatFunc twotop = RatFunc::constant(t, GaussRat(2)) * r[m];
    for (std::size_t k = 2 * m; k-- > m;) {
        RatFunc known(Poly::zero(t));
        for (std::size_t i = k - m + 1; i <= m; ++i) {
            if (k < i) continue;
            std::size_t j = k - i;
            if (j <= k - m || j > m) continue;
            known = known + r[i] * r[j];
        }
        r[k - m] = (u.coeff(k) - known) / twotop;
    }
    UniPoly w{r, t};
    w.trim();
    if (w * w == u) return {SquareTestResult::Kind::Square, w, ""};
    UniPoly diff = w * w - u;
    std::string forced = "forced root coefficients:";
    for (std::size_t j = m + 1; j-- > 0;)
        forced += " [" + std::to_string(j) + "] " + w.coeff(j).str() + ";";
    return {SquareTestResult::Kind::CoefficientMismatch, UniPoly::zero(t),
            forced + " mismatch at degree " + std::to_string(diff.degree())};
}

Certificate integrality_refutation(const Poly& family_eq, const ChartSpec& chart,
                                   const std::string& quad_var,
                                   const std::map<std::string, Poly>& spec_map) {
    const VarTablePtr& t = family_eq.table();
    Poly eq = family_eq.dehomogenize(chart.ones);
    MonicQuadratic mq = extract_monic_quadratic(eq, quad_var);
    Poly delta = discriminant(mq);

    std::map<std::string, Poly> full = spec_map;
    for (const auto& v : delta.support_vars())
        if (!full.count(v) && t->grade(t->index(v)) == Grade::Param)
            full[v] = Poly::variable(t, v);
    Poly image = delta.subst(full, t);

    std::string test_var = quad_var;
    for (const auto& v : image.support_vars())
        if (t->grade(t->index(v)) != Grade::Param) test_var = v;

    Certificate cert;
    cert.kind = "integrality-refutation";
    cert.trace.push_back("discriminant = " + delta.str());
    cert.trace.push_back("specialized discriminant = " + image.str());
    SquareTestResult res = univariate_square_test(image, test_var);
    if (res.is_square()) {
        cert.verdict = Verdict::Unknown;
        cert.failure = "specialization is a square (" + res.witness.str(test_var) +
                       ")^2; refutation inconclusive";
    } else {
        cert.verdict = Verdict::Pass;
        cert.trace.push_back("not a square: " + res.detail);
    }
    return cert;
}

Certificate semistability_check(const DegenerationFamily& family, const ChartSpec& chart,
                                const std::pair<std::string, std::string>& minor_cols,
                                const std::vector<std::pair<int, std::string>>& component_partials,
                                const std::optional<std::string>& intersection_partial) {
    if (family.eqs.size() != 2)
        throw ComponentMismatch("family does not carry a separate fiber equation");
    const Poly& f = family.eqs[0];
    const Poly& h = family.eqs[1];
    const VarTablePtr& t = f.table();
    if (!(h.set_zero(family.coord_b) == family.component0) ||
        !(h.set_zero(family.coord_a) == family.component1))
        throw ComponentMismatch("declared components do not restrict from the total space");

    Certificate cert;
    cert.kind = "semistability";
    Poly hc = h.dehomogenize(chart.ones);
    Poly fc = f.dehomogenize(chart.ones);

    auto fail = [&](const std::string& what) {
        cert.verdict = Verdict::Fail;
        cert.failure = what;
        return cert;
    };

    Matrix jac = jacobian_matrix({hc, fc}, {minor_cols.first, minor_cols.second});
    Poly minor = det_minor(jac, {0, 1}, {0, 1});
    if (!unit_off_boundary(minor, chart))
        return fail("(a) Jacobian minor in (" + minor_cols.first + "," + minor_cols.second +
                    ") is " + minor.str() + ", not a boundary unit");
    cert.trace.push_back("(a) minor(" + minor_cols.first + "," + minor_cols.second +
                         ") = " + minor.str());

    Poly fiber = fc.set_zero(family.param);
    Poly prod = (Poly::variable(t, family.coord_a) * Poly::variable(t, family.coord_b))
                    .dehomogenize(chart.ones);
    if (!(fiber == prod))
        return fail("(b) special fiber equation does not split as " + family.coord_a + "*" +
                    family.coord_b);
    cert.trace.push_back("(b) fiber splits as " + family.coord_a + "*" + family.coord_b);

    for (const auto& [which, v] : component_partials) {
        const Poly& comp = which == 0 ? family.component0 : family.component1;
        Poly partial = comp.dehomogenize(chart.ones).derivative(v);
        if (!unit_off_boundary(partial, chart))
            return fail("(c) partial d/d" + v + " of component " + std::to_string(which) +
                        " is " + partial.str() + ", not a boundary unit");
        cert.trace.push_back("(c) component " + std::to_string(which) + ": d/d" + v +
                             " = " + partial.str());
    }

    if (intersection_partial) {
        Poly partial =
            family.intersection.dehomogenize(chart.ones).derivative(*intersection_partial);
        if (!unit_off_boundary(partial, chart))
            return fail("(d) intersection partial d/d" + *intersection_partial + " is " +
                        partial.str() + ", not a boundary unit");
        cert.trace.push_back("(d) intersection: d/d" + *intersection_partial + " = " +
                             partial.str());
    }

    cert.verdict = Verdict::Pass;
    return cert;
}

namespace {

std::vector<Poly> graded_partials(const Poly& q) {
    std::vector<Poly> out;
    const VarTablePtr& t = q.table();
    for (std::size_t i = 0; i < t->size(); ++i)
        if (t->grade(i) != Grade::Param) out.push_back(q.derivative(t->name(i)));
    return out;
}

} // namespace

Certificate conic_singularity_check(const Poly& q, const std::vector<Ideal>& conics,
                                    const Limits& limits) {
    Certificate cert;
    cert.kind = "singular-locus-conics";
    std::vector<Poly> partials = graded_partials(q);
    for (std::size_t ci = 0; ci < conics.size(); ++ci) {
        GroebnerBasis gb = buchberger(conics[ci], limits);
        auto qm = ideal_member(q, gb);
        if (!qm.member) {
            cert.verdict = Verdict::Fail;
            cert.failure = "hypersurface not in ideal " + std::to_string(ci) +
                           "; normal form " + qm.normal_form.str();
            return cert;
        }
        for (std::size_t pi = 0; pi < partials.size(); ++pi) {
            if (partials[pi].is_zero()) continue;
            auto pm = ideal_member(partials[pi], gb);
            if (!pm.member) {
                cert.verdict = Verdict::Fail;
                cert.failure = "partial " + std::to_string(pi) + " not in ideal " +
                               std::to_string(ci) + "; normal form " +
                               pm.normal_form.str();
                return cert;
            }
        }
        cert.trace.push_back("ideal " + std::to_string(ci) +
                             ": contains the hypersurface and every partial");
    }
    cert.verdict = Verdict::Pass;
    return cert;
}

Certificate singular_in_hyperplanes(const Poly& q, const Poly& h,
                                    const std::vector<ChartSpec>& charts,
                                    const Limits& limits) {
    Certificate cert;
    cert.kind = "singular-locus-hyperplanes";
    std::vector<Poly> partials = graded_partials(q);
    bool unknown = false;
    for (std::size_t ci = 0; ci < charts.size(); ++ci) {
        std::vector<Poly> gens;
        Poly qc = q.dehomogenize(charts[ci].ones);
        if (!qc.is_zero()) gens.push_back(qc);
        for (const auto& p : partials) {
            Poly pc = p.dehomogenize(charts[ci].ones);
            if (!pc.is_zero()) gens.push_back(pc);
        }
        if (gens.empty()) continue;  // Jacobian locus is everything here
        Tribool r = radical_member(h.dehomogenize(charts[ci].ones), Ideal(gens), limits);
        if (r == Tribool::False) {
            cert.verdict = Verdict::Fail;
            cert.failure = "chart " + std::to_string(ci) +
                           ": hyperplane product is not in the radical";
            return cert;
        }
        if (r == Tribool::Unknown) {
            unknown = true;
            cert.trace.push_back("chart " + std::to_string(ci) + ": resources exhausted");
        } else {
            cert.trace.push_back("chart " + std::to_string(ci) + ": radical membership holds");
        }
    }
    cert.verdict = unknown ? Verdict::Unknown : Verdict::Pass;
    return cert;
}

} // namespace bidegree
