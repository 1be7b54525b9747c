#include "bidegree/families.hpp"

namespace bidegree {

namespace {

void require_var(const VarTablePtr& t, const std::string& name, Grade g) {
    if (!t->has(name)) throw BadParams("missing required variable " + name);
    if (t->grade(t->index(name)) != g)
        throw BadParams("variable " + name + " has the wrong grading");
}

void require_seed_avoids(const Poly& seed, std::initializer_list<std::string> vars) {
    auto support = seed.support_vars();
    for (const auto& v : vars)
        if (support.count(v))
            throw SeedDegreeMismatch("seed must not involve " + v);
}

Poly var(const VarTablePtr& t, const std::string& name, unsigned power = 1) {
    return Poly::variable(t, name, power);
}

Bidegree seed_bidegree(const Poly& seed) {
    if (seed.is_zero()) throw SeedDegreeMismatch("seed is zero");
    if (!seed.is_bihomogeneous()) throw SeedDegreeMismatch("seed is not bihomogeneous");
    return seed.bidegree();
}

std::string regime_of(FamilyParams& p) {
    if (p.n == 0 && p.r == 0) return "";
    if (p.n < p.r + 1) throw BadParams("need n >= r+1");
    return p.n >= p.r + 2 ? "n>=r+2" : "n==r+1";
}

} // namespace

DegenerationFamily build_family(FamilyVariant variant, FamilyParams params,
                                const FamilySeeds& seeds,
                                std::set<std::string> extra_boundary) {
    const Poly& G = seeds.G;
    const VarTablePtr& t = G.table();
    DegenerationFamily fam;
    fam.variant = variant;
    fam.seed = G;
    fam.regime = regime_of(params);

    auto fix_degrees = [&](Bidegree b) {
        if (params.d == 0) params.d = b.dy;
        if (params.f == 0) params.f = b.dx;
        if (params.d != b.dy || params.f != b.dx)
            throw SeedDegreeMismatch("seed has bidegree " + b.str() +
                                     ", declared (" + std::to_string(params.d) + "," +
                                     std::to_string(params.f) + ")");
    };

    switch (variant) {
        case FamilyVariant::DoubleCone: {
            fix_degrees(seed_bidegree(G));
            if (params.d < 2 || params.f < 2) throw BadParams("double cone needs d, f >= 2");
            for (const char* v : {"y0", "y1"}) require_var(t, v, Grade::Y);
            for (const char* v : {"x0", "x1"}) require_var(t, v, Grade::X);
            require_var(t, "a", Grade::Y);
            require_var(t, "b", Grade::Y);
            require_var(t, "t", Grade::Param);
            require_seed_avoids(G, {"a", "b", "t"});
            unsigned d1 = static_cast<unsigned>(params.d - 1);
            unsigned f0 = static_cast<unsigned>(params.f);
            Poly F = var(t, "a") * var(t, "b") + var(t, "t") * var(t, "y0", 2);
            Poly A = var(t, "y0", d1) * var(t, "x0", f0) * var(t, "a");
            Poly B = var(t, "y1", d1) * var(t, "x1", f0) * var(t, "b");
            fam.eqs = {F, G + A + B};
            fam.component0 = G + A;
            fam.component1 = G + B;
            fam.intersection = G;
            fam.coord_a = "a";
            fam.coord_b = "b";
            fam.param = "t";
            fam.boundary = ChartSpec::make({}, {"y0", "x0", "y1", "x1"});
            break;
        }
        case FamilyVariant::ThreeTwo: {
            fix_degrees(seed_bidegree(G));
            if (params.d != 3 || params.f != 2)
                throw BadParams("this degeneration is built for a (3,2) seed");
            for (const char* v : {"y0", "y1"}) require_var(t, v, Grade::Y);
            for (const char* v : {"x0", "x1"}) require_var(t, v, Grade::X);
            require_var(t, "c", Grade::Y);
            require_var(t, "d", Grade::Y);
            require_var(t, "s", Grade::Param);
            require_seed_avoids(G, {"c", "d", "s"});
            Poly F = var(t, "c") * var(t, "d") + var(t, "s") * var(t, "y1", 2);
            Poly A = var(t, "y1", 2) * var(t, "x1", 2) * var(t, "c");
            Poly B = var(t, "y0", 2) * var(t, "x0", 2) * var(t, "d");
            fam.eqs = {F, G + A + B};
            fam.component0 = G + A;
            fam.component1 = G + B;
            fam.intersection = G;
            fam.coord_a = "c";
            fam.coord_b = "d";
            fam.param = "s";
            fam.boundary = ChartSpec::make({}, {"y0", "x0", "y1", "x1"});
            break;
        }
        case FamilyVariant::Kuechle: {
            fix_degrees(seed_bidegree(G));
            if (params.d != 2 || params.f != 2)
                throw BadParams("this degeneration needs a (2,2) seed");
            for (const char* v : {"y0", "y1"}) require_var(t, v, Grade::Y);
            for (const char* v : {"x0", "x1"}) require_var(t, v, Grade::X);
            require_var(t, "a", Grade::Y);
            require_var(t, "b", Grade::X);
            require_var(t, "t", Grade::Param);
            require_seed_avoids(G, {"a", "b", "t"});
            Poly F = var(t, "a") * var(t, "b") + var(t, "t") * var(t, "x0") * var(t, "y0");
            Poly A = var(t, "y0") * var(t, "x0", 2) * var(t, "a");
            Poly B = var(t, "y1", 2) * var(t, "x1") * var(t, "b");
            fam.eqs = {F, G + A + B};
            fam.component0 = G + A;
            fam.component1 = G + B;
            fam.intersection = G;
            fam.coord_a = "a";
            fam.coord_b = "b";
            fam.param = "t";
            fam.boundary = ChartSpec::make({}, {"y0", "x0", "y1", "x1"});
            break;
        }
        case FamilyVariant::DegreeRaise: {
            if (!seeds.H) throw BadParams("degree raise needs the target hypersurface");
            fix_degrees(seed_bidegree(G));
            Bidegree bh = seed_bidegree(*seeds.H);
            if (params.d2 == 0) params.d2 = bh.dy;
            if (params.f2 == 0) params.f2 = bh.dx;
            if (bh.dy != params.d2 || bh.dx != params.f2)
                throw SeedDegreeMismatch("target has bidegree " + bh.str());
            if (params.d2 < params.d || params.f2 < params.f)
                throw BadParams("target bidegree must dominate the seed bidegree");
            require_var(t, "y0", Grade::Y);
            require_var(t, "x0", Grade::X);
            require_var(t, "t", Grade::Param);
            require_seed_avoids(G, {"t"});
            require_seed_avoids(*seeds.H, {"t"});
            Poly F = var(t, "y0", static_cast<unsigned>(params.d2 - params.d)) *
                     var(t, "x0", static_cast<unsigned>(params.f2 - params.f));
            fam.eqs = {var(t, "t") * *seeds.H - G * F};
            fam.component0 = G;
            fam.component1 = F;
            fam.intersection = Poly::zero(t);
            fam.param = "t";
            std::set<std::string> bd = {"y0", "x0"};
            if (t->has("y1")) bd.insert("y1");
            if (t->has("x1")) bd.insert("x1");
            fam.boundary = ChartSpec::make({}, std::move(bd));
            break;
        }
        case FamilyVariant::CubicReduction: {
            if (!seeds.cubic || !seeds.M || !seeds.L)
                throw BadParams("cubic reduction needs cubic, M and L seeds");
            const Poly& c3 = *seeds.cubic;
            const Poly& m2 = *seeds.M;
            const Poly& l2 = *seeds.L;
            if (seed_bidegree(c3) != Bidegree{0, 3} || seed_bidegree(m2) != Bidegree{0, 2} ||
                seed_bidegree(l2) != Bidegree{0, 2})
                throw SeedDegreeMismatch("cubic reduction wants degrees (0,3),(0,2),(0,2)");
            const VarTablePtr& ct = c3.table();
            require_var(ct, "y0", Grade::Y);
            require_var(ct, "y1", Grade::Y);
            require_var(ct, "x0", Grade::X);
            require_var(ct, "t", Grade::Param);
            Poly x_eq = var(ct, "y0") * var(ct, "y1") * c3 +
                        var(ct, "y1", 2) * var(ct, "x0") * m2 -
                        var(ct, "t") * var(ct, "y0", 2) * var(ct, "x0") * l2;
            // the matching quartic lives in one projective block more
            std::vector<std::pair<std::string, Grade>> qvars;
            for (std::size_t i = 0; i < ct->size(); ++i)
                if (ct->grade(i) == Grade::X) qvars.emplace_back(ct->name(i), Grade::X);
            qvars.emplace_back("xr1", Grade::X);
            for (std::size_t i = 0; i < ct->size(); ++i)
                if (ct->grade(i) == Grade::Param) qvars.emplace_back(ct->name(i), Grade::Param);
            VarTablePtr qt = VarTable::make(std::move(qvars), ct->order());
            Poly q_eq = var(qt, "xr1") * c3.embed(qt) + var(qt, "xr1", 2) * m2.embed(qt) -
                        var(qt, "t") * var(qt, "x0", 2) * l2.embed(qt);
            fam.seed = c3;
            fam.eqs = {x_eq, q_eq};
            fam.component0 = var(ct, "y1");
            fam.component1 = var(ct, "y0") * c3 + var(ct, "y1") * var(ct, "x0") * m2;
            fam.intersection = Poly::zero(ct);
            fam.param = "t";
            std::set<std::string> bd = {"y0", "y1", "x0"};
            if (ct->has("x1")) bd.insert("x1");
            fam.boundary = ChartSpec::make({}, std::move(bd));
            params.d = 2;
            params.f = 3;
            break;
        }
    }
    fam.params = params;
    for (const auto& v : extra_boundary) fam.boundary.boundary.insert(v);
    fam.boundary.invertibles.insert(extra_boundary.begin(), extra_boundary.end());
    for (const auto& e : fam.eqs)
        if (!e.is_bihomogeneous())
            throw SeedDegreeMismatch("constructed equation is not bihomogeneous");
    return fam;
}

Certificate ch1_hypothesis_check(const Poly& hypersurface,
                                 const std::string& distinguished_var,
                                 const ChartSpec& boundary) {
    if (hypersurface.degree_in(distinguished_var) != 1)
        throw NotLinearInVariable(distinguished_var);
    Poly P = hypersurface.coeff_of_power(distinguished_var, 1);
    Certificate cert;
    cert.kind = "ch1-hypothesis";
    if (P.is_zero()) {
        cert.verdict = Verdict::Fail;
        cert.failure = "coefficient of " + distinguished_var + " vanishes";
        return cert;
    }
    const VarTablePtr& t = hypersurface.table();
    auto divides_p = [&](const std::string& name) {
        std::size_t i = t->index(name);
        for (const auto& [m, c] : P.terms())
            if (m.exps[i] == 0) return false;
        return true;
    };
    std::string ywit, xwit;
    for (const auto& name : boundary.boundary) {
        if (!t->has(name)) continue;
        Grade g = t->grade(t->index(name));
        if (g == Grade::Y && ywit.empty() && divides_p(name)) ywit = name;
        if (g == Grade::X && xwit.empty() && divides_p(name)) xwit = name;
    }
    if (ywit.empty() || xwit.empty()) {
        cert.verdict = Verdict::Fail;
        cert.failure = "no boundary variable in the " + std::string(ywit.empty() ? "Y" : "X") +
                       " block divides " + P.str();
        if (P.num_terms() > 1)
            cert.failure += " (only single-variable factors are detected)";
        return cert;
    }
    cert.verdict = Verdict::Pass;
    cert.trace.push_back("linear coefficient P = " + P.str());
    cert.trace.push_back("divisor of type (1,0): {" + ywit + " = 0}");
    cert.trace.push_back("divisor of type (0,1): {" + xwit + " = 0}");
    return cert;
}

FiberSplit special_fiber_split(const DegenerationFamily& fam) {
    const VarTablePtr& t = fam.eqs.front().table();
    FiberSplit out{fam.component0, fam.component1, fam.intersection, {}};
    out.cert.kind = "special-fiber-split";
    switch (fam.variant) {
        case FamilyVariant::DoubleCone:
        case FamilyVariant::ThreeTwo:
        case FamilyVariant::Kuechle: {
            Poly f0 = fam.eqs[0].set_zero(fam.param);
            Poly prod = Poly::variable(t, fam.coord_a) * Poly::variable(t, fam.coord_b);
            if (!(f0 == prod))
                throw FactorizationFails("fiber equation is " + f0.str() + ", wanted " +
                                         prod.str());
            out.cert.trace.push_back("F|_{" + fam.param + "=0} = " + fam.coord_a + "*" +
                                     fam.coord_b);
            const Poly& H = fam.eqs[1];
            if (!(H.set_zero(fam.coord_b) == fam.component0))
                throw FactorizationFails("restriction to {" + fam.coord_b +
                                         "=0} misses the declared first component");
            if (!(H.set_zero(fam.coord_a) == fam.component1))
                throw FactorizationFails("restriction to {" + fam.coord_a +
                                         "=0} misses the declared second component");
            if (!(H.set_zero(fam.coord_a).set_zero(fam.coord_b) == fam.intersection))
                throw FactorizationFails("components do not meet in the declared locus");
            out.cert.trace.push_back("both restrictions match the declared components");
            break;
        }
        case FamilyVariant::DegreeRaise: {
            Poly f0 = fam.eqs[0].set_zero(fam.param);
            if (!(f0 == -(fam.component0 * fam.component1)))
                throw FactorizationFails("fiber is not the declared product");
            out.cert.trace.push_back("fiber at " + fam.param + "=0 is -seed*multiplier");
            break;
        }
        case FamilyVariant::CubicReduction: {
            Poly f0 = fam.eqs[0].set_zero(fam.param);
            if (!(f0 == fam.component0 * fam.component1))
                throw FactorizationFails("fiber is not the declared product");
            out.cert.trace.push_back("fiber at " + fam.param + "=0 splits off {" +
                                     fam.component0.str() + " = 0}");
            break;
        }
    }
    out.cert.verdict = Verdict::Pass;
    return out;
}

} // namespace bidegree
