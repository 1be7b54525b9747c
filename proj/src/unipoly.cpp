#include "bidegree/unipoly.hpp"

namespace bidegree {

UniPoly UniPoly::constant(const RatFunc& c) {
    UniPoly u{{}, c.table()};
    if (!c.is_zero()) u.coeffs.push_back(c);
    return u;
}

const RatFunc& UniPoly::lead() const {
    if (is_zero()) throw ZeroPolynomial();
    return coeffs.back();
}

RatFunc UniPoly::coeff(std::size_t k) const {
    if (k < coeffs.size()) return coeffs[k];
    return RatFunc(Poly::zero(table));
}

void UniPoly::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r{{}, a.table};
    std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) r.coeffs.push_back(a.coeff(k) + b.coeff(k));
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r{{}, a.table};
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, RatFunc(Poly::zero(a.table)));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const RatFunc& c) const {
    if (c.is_zero()) return zero(table);
    UniPoly r = *this;
    for (auto& x : r.coeffs) x = x * c;
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

UniPoly UniPoly::derivative() const {
    UniPoly r{{}, table};
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        r.coeffs.push_back(coeffs[k] *
                           RatFunc::constant(table, GaussRat(Rational(k))));
    r.trim();
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(RatFunc::constant(table, GaussRat(1)));
    UniPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        if (!(a.coeffs[k] == b.coeffs[k])) return false;
    return true;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs[k].str() + ")";
        if (k >= 1) out += "*" + var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

UniPoly unipoly_from(const Poly& p, const std::string& var) {
    UniPoly u{{}, p.table()};
    unsigned d = p.degree_in(var);
    for (unsigned k = 0; k <= d; ++k)
        u.coeffs.push_back(RatFunc(p.coeff_of_power(var, k)));
    u.trim();
    return u;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivideByZero();
    UniPoly q = UniPoly::zero(a.table);
    UniPoly r = a;
    RatFunc binv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        RatFunc c = r.lead() * binv;
        UniPoly term = UniPoly::zero(a.table);
        term.coeffs.assign(shift + 1, RatFunc(Poly::zero(a.table)));
        term.coeffs[shift] = c;
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    UniPoly m = p.monic();
    if (m.degree() == 0) return {};
    UniPoly d = m.derivative();
    UniPoly g = gcd(m, d);
    if (g.degree() == 0) return {m};
    UniPoly w = divmod(m, g).first;
    UniPoly y = divmod(d, g).first;
    UniPoly z = y - w.derivative();
    std::vector<UniPoly> out;
    while (w.degree() > 0) {
        UniPoly ai = gcd(w, z);
        out.push_back(ai);
        w = divmod(w, ai).first;
        y = divmod(z, ai).first;
        z = y - w.derivative();
    }
    return out;
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly::zero(p.table());
    Monomial lm = p.leading_monomial();
    Monomial half(lm.exps.size());
    for (std::size_t i = 0; i < lm.exps.size(); ++i) {
        if (lm.exps[i] % 2) return std::nullopt;
        half.exps[i] = lm.exps[i] / 2;
    }
    auto lc = gauss_sqrt(p.leading_coeff());
    if (!lc) return std::nullopt;
    Poly r = Poly::monomial(p.table(), half, *lc);
    Poly rem = p - r * r;
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        const Monomial& top = r.leading_monomial();
        if (!top.divides(rm)) return std::nullopt;
        GaussRat c = rem.leading_coeff() / (GaussRat(2) * r.leading_coeff());
        Poly corr = Poly::monomial(p.table(), rm.quotient(top), c);
        if (!monomial_less(corr.leading_monomial(), top, p.table()->order()))
            return std::nullopt;
        r += corr;
        rem = p - r * r;
    }
    return r;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& q) {
    if (q.is_zero()) return RatFunc(Poly::zero(q.table()));
    auto s = poly_sqrt(q.num() * q.den());
    if (!s) return std::nullopt;
    return RatFunc(*s, q.den());
}

} // namespace bidegree
