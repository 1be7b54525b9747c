#include "bidegree/ratfunc.hpp"

namespace bidegree {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!same_table(num_.table(), den_.table())) throw VarTableMismatch();
    if (den_.is_zero()) throw DivideByZero();
}

bool RatFunc::is_polynomial() const {
    return den_.num_terms() == 1 && den_.leading_monomial().is_constant() &&
           den_.leading_coeff().is_one();
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw DivideByZero();
    return raw(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc::raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc::raw(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::raw(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::pow(unsigned e) const {
    return raw(num_.pow(e), den_.pow(e));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc substitute_hom(const Poly& p, const std::map<std::string, RatFunc>& map,
                       const VarTablePtr& target) {
    for (const auto& [name, img] : map)
        if (img.den().is_zero()) throw ZeroDenominatorImage();
    RatFunc acc = RatFunc::constant(target, GaussRat(0));
    for (const auto& [m, c] : p.terms()) {
        RatFunc t = RatFunc::constant(target, c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            auto it = map.find(p.table()->name(i));
            if (it == map.end()) throw UnmappedVariable(p.table()->name(i));
            t = t * it->second.pow(m.exps[i]);
        }
        acc = acc + t;
    }
    return acc;
}

} // namespace bidegree
