#include "bidegree/poly.hpp"

#include <sstream>

namespace bidegree {

Poly Poly::constant(VarTablePtr table, GaussRat c) {
    Poly p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.table_->size()), std::move(c));
    return p;
}

Poly Poly::variable(VarTablePtr table, const std::string& name, unsigned power) {
    Poly p(std::move(table));
    Monomial m(p.table_->size());
    m.exps[p.table_->index(name)] = power;
    if (power == 0) m = Monomial(p.table_->size());
    p.terms_.emplace(std::move(m), GaussRat(1));
    return p;
}

Poly Poly::monomial(VarTablePtr table, Monomial m, GaussRat c) {
    Poly p(std::move(table));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

const Monomial& Poly::leading_monomial() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.begin()->first;
}

const GaussRat& Poly::leading_coeff() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.begin()->second;
}

GaussRat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_table(const Poly& o) const {
    if (!same_table(table_, o.table_)) throw VarTableMismatch();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_table(b);
    Poly r(a.table_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const GaussRat& c, const Poly& p) {
    Poly r(p.table_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(table_, GaussRat(1));
    Poly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::derivative(const std::string& var) const {
    std::size_t i = table_->index(var);
    Poly r(table_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial d = m;
        GaussRat nc = c * GaussRat(Rational(d.exps[i]));
        --d.exps[i];
        r.add_term(d, nc);
    }
    return r;
}

unsigned Poly::degree_in(const std::string& var) const {
    std::size_t i = table_->index(var);
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        if (m.exps[i] > d) d = m.exps[i];
    return d;
}

Poly Poly::coeff_of_power(const std::string& var, unsigned k) const {
    std::size_t i = table_->index(var);
    Poly r(table_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] != k) continue;
        Monomial d = m;
        d.exps[i] = 0;
        r.add_term(d, c);
    }
    return r;
}

Bidegree Poly::term_bidegree(const Monomial& m) const {
    Bidegree b;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        switch (table_->grade(i)) {
            case Grade::Y: b.dy += static_cast<int>(m.exps[i]); break;
            case Grade::X: b.dx += static_cast<int>(m.exps[i]); break;
            case Grade::Param: break;
        }
    }
    return b;
}

Bidegree Poly::bidegree() const {
    if (is_zero()) throw ZeroPolynomial();
    Bidegree b = term_bidegree(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        Bidegree t = term_bidegree(m);
        if (!(t == b))
            throw NotBihomogeneous(monomial(table_, terms_.begin()->first, GaussRat(1)).str(),
                                   monomial(table_, m, GaussRat(1)).str());
    }
    return b;
}

bool Poly::is_bihomogeneous() const {
    if (is_zero()) return true;
    Bidegree b = term_bidegree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (!(term_bidegree(m) == b)) return false;
    return true;
}

Poly Poly::dehomogenize(const std::set<std::string>& chart) const {
    std::vector<bool> drop(table_->size(), false);
    for (const auto& v : chart) drop[table_->index(v)] = true;
    Poly r(table_);
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        for (std::size_t i = 0; i < d.exps.size(); ++i)
            if (drop[i]) d.exps[i] = 0;
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::rehomogenize(const std::string& y_var, const std::string& x_var,
                        Bidegree target) const {
    std::size_t yi = table_->index(y_var), xi = table_->index(x_var);
    Poly r(table_);
    for (const auto& [m, c] : terms_) {
        Bidegree b = term_bidegree(m);
        if (b.dy > target.dy || b.dx > target.dx)
            throw Error("rehomogenize: term exceeds target bidegree " + target.str());
        Monomial d = m;
        d.exps[yi] += static_cast<unsigned>(target.dy - b.dy);
        d.exps[xi] += static_cast<unsigned>(target.dx - b.dx);
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::set_zero(const std::string& var) const {
    std::size_t i = table_->index(var);
    Poly r(table_);
    for (const auto& [m, c] : terms_)
        if (m.exps[i] == 0) r.add_term(m, c);
    return r;
}

Poly Poly::subst(const std::map<std::string, Poly>& map, const VarTablePtr& target) const {
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            auto it = map.find(table_->name(i));
            if (it == map.end()) throw UnmappedVariable(table_->name(i));
            t = t * it->second.pow(m.exps[i]);
        }
        r += t;
    }
    return r;
}

Poly Poly::exact_divide(const Poly& g) const {
    check_table(g);
    if (g.is_zero()) throw DivideByZero();
    Poly rem = *this;
    Poly q(table_);
    const Monomial& lg = g.leading_monomial();
    const GaussRat& cg = g.leading_coeff();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!lg.divides(lm)) throw NotDivisible();
        Monomial qm = lm.quotient(lg);
        GaussRat qc = rem.leading_coeff() / cg;
        Poly t = Poly::monomial(table_, qm, qc);
        q += t;
        rem -= t * g;
    }
    return q;
}

Poly Poly::embed(const VarTablePtr& bigger) const {
    Poly r(bigger);
    for (const auto& [m, c] : terms_) {
        Monomial d(bigger->size());
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i]) d.exps[bigger->index(table_->name(i))] = m.exps[i];
        r.add_term(d, c);
    }
    return r;
}

std::set<std::string> Poly::support_vars() const {
    std::set<std::string> s;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i]) s.insert(table_->name(i));
    return s;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negated = false;
        if (!first) {
            if (cs.size() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                out << " - ";
                cs = cs.substr(1);
                negated = true;
            } else {
                out << " + ";
            }
        }
        first = false;
        bool needs_parens = cs.find('+') != std::string::npos ||
                            (cs.find('-', negated ? 0 : 1) != std::string::npos);
        std::string vars;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (!m.exps[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += table_->name(i);
            if (m.exps[i] > 1) vars += "^" + std::to_string(m.exps[i]);
        }
        if (vars.empty()) {
            out << (needs_parens ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << vars;
        } else if (cs == "-1" && !negated) {
            out << "-" << vars;
        } else {
            out << (needs_parens ? "(" + cs + ")" : cs) << "*" << vars;
        }
    }
    return out.str();
}

} // namespace bidegree
