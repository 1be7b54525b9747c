#include "bidegree/groebner.hpp"

#include <algorithm>

namespace bidegree {

Ideal::Ideal(std::vector<Poly> gens_) : gens(std::move(gens_)) {
    if (gens.empty()) throw Error("ideal needs at least one generator");
    for (const auto& g : gens) {
        if (g.is_zero()) throw Error("ideal generators must be nonzero");
        if (!same_table(g.table(), gens.front().table())) throw VarTableMismatch();
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    for (const auto& g : basis)
        if (!g.is_zero() && g.leading_monomial().is_constant()) return true;
    return false;
}

namespace {

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.leading_coeff().inverse() * p;
}

} // namespace

Poly s_polynomial(const Poly& a, const Poly& b) {
    const Monomial& la = a.leading_monomial();
    const Monomial& lb = b.leading_monomial();
    Monomial l = Monomial::lcm(la, lb);
    Poly ta = Poly::monomial(a.table(), l.quotient(la), a.leading_coeff().inverse());
    Poly tb = Poly::monomial(b.table(), l.quotient(lb), b.leading_coeff().inverse());
    return ta * a - tb * b;
}

namespace {

// reduction with a per-step callback so buchberger can enforce its limits
// even inside one long division chain
template <class Note>
Poly reduce_noted(const Poly& f, const std::vector<Poly>& gens, Note&& note) {
    Poly p = f;
    Poly r(f.table());
    while (!p.is_zero()) {
        note(p.num_terms());
        const Monomial& lm = p.leading_monomial();
        const Poly* reducer = nullptr;
        for (const auto& g : gens) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Poly t = Poly::monomial(p.table(), lm.quotient(reducer->leading_monomial()),
                                    p.leading_coeff() / reducer->leading_coeff());
            p -= t * *reducer;
        } else {
            Poly lt = Poly::monomial(p.table(), lm, p.leading_coeff());
            r += lt;
            p -= lt;
        }
    }
    return r;
}

} // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& gens) {
    return reduce_noted(f, gens, [](std::size_t) {});
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
};

template <class Note>
void interreduce(std::vector<Poly>& basis, Note&& note) {
    // drop generators whose leading term another one divides
    for (std::size_t i = 0; i < basis.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                // on ties (equal leading monomials) keep the earlier one
                if (basis[i].leading_monomial() == basis[j].leading_monomial() && j > i)
                    continue;
                redundant = true;
                break;
            }
        }
        if (redundant) basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        else ++i;
    }
    // then fully reduce each tail against the others
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        basis[i] = monic(reduce_noted(basis[i], others, note));
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Poly& p) { return p.is_zero(); }),
                basis.end());
    std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
        return monomial_less(a.leading_monomial(), b.leading_monomial(),
                             a.table()->order());
    });
}

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const Limits& limits) {
    auto deadline = std::chrono::steady_clock::now() + limits.timeout;
    MonomialOrder order = ideal.table()->order();

    std::vector<Poly> basis;
    for (const auto& g : ideal.gens) {
        Poly m = monic(g);
        if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);
    }

    GroebnerStats stats;
    std::size_t steps = 0;
    auto note_terms = [&](std::size_t n) {
        if (n > stats.max_intermediate_terms) stats.max_intermediate_terms = n;
        bool check_clock = (++steps & 0xff) == 0;
        if (n > limits.max_terms ||
            (check_clock && std::chrono::steady_clock::now() > deadline))
            throw ResourceExceeded(stats.pairs_processed, stats.max_intermediate_terms);
    };

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // Buchberger's first criterion: coprime leading terms reduce to 0
            if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
            Monomial l = Monomial::lcm(basis[i].leading_monomial(),
                                       basis[j].leading_monomial());
            pairs.push_back({i, j, l, l.total_degree()});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree, order and indices as tie-breaks
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            bool better = a.deg < b.deg ||
                          (a.deg == b.deg && monomial_less(a.lcm, b.lcm, order)) ||
                          (a.deg == b.deg && a.lcm == b.lcm &&
                           (a.j < b.j || (a.j == b.j && a.i < b.i)));
            if (better) best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        if (++stats.pairs_processed > limits.max_pairs ||
            std::chrono::steady_clock::now() > deadline)
            throw ResourceExceeded(stats.pairs_processed, stats.max_intermediate_terms);

        Poly s = s_polynomial(basis[pr.i], basis[pr.j]);
        note_terms(s.num_terms());
        Poly r = reduce_noted(s, basis, note_terms);
        note_terms(r.num_terms());
        if (!r.is_zero()) {
            basis.push_back(monic(r));
            push_pairs_for(basis.size() - 1);
        }
    }

    GroebnerBasis out;
    out.order = order;
    out.basis = basis;
    interreduce(out.basis, note_terms);
    out.stats = stats;
    return out;
}

MembershipResult ideal_member(const Poly& f, const GroebnerBasis& gb) {
    Poly nf = normal_form(f, gb.basis);
    return {nf.is_zero(), nf};
}

MembershipResult ideal_member(const Poly& f, const Ideal& i, const Limits& limits) {
    if (!same_table(f.table(), i.table())) throw VarTableMismatch();
    return ideal_member(f, buchberger(i, limits));
}

Tribool radical_member(const Poly& f, const Ideal& i, const Limits& limits) {
    if (!same_table(f.table(), i.table())) throw VarTableMismatch();
    if (f.is_zero()) return Tribool::True;
    std::string fresh = "zrab";
    while (i.table()->has(fresh)) fresh += "_";
    VarTablePtr ext = i.table()->extended(fresh, Grade::Param);
    std::vector<Poly> gens;
    for (const auto& g : i.gens) gens.push_back(g.embed(ext));
    gens.push_back(Poly::constant(ext, GaussRat(1)) -
                   Poly::variable(ext, fresh) * f.embed(ext));
    try {
        GroebnerBasis gb = buchberger(Ideal(std::move(gens)), limits);
        return gb.is_unit_ideal() ? Tribool::True : Tribool::False;
    } catch (const ResourceExceeded&) {
        return Tribool::Unknown;
    }
}

Ideal with_order(const Ideal& i, MonomialOrder order) {
    const VarTablePtr& t = i.table();
    std::vector<std::pair<std::string, Grade>> vars;
    for (std::size_t k = 0; k < t->size(); ++k) vars.emplace_back(t->name(k), t->grade(k));
    VarTablePtr nt = VarTable::make(std::move(vars), order);
    std::vector<Poly> gens;
    for (const auto& g : i.gens) gens.push_back(g.embed(nt));
    return Ideal(std::move(gens));
}

} // namespace bidegree
