#ifndef BIDEGREE_RATFUNC_HPP
#define BIDEGREE_RATFUNC_HPP

#include <map>
#include <string>

#include "bidegree/poly.hpp"

namespace bidegree {

/// Unreduced fraction of two polynomials. Equality is cross-multiplication;
/// no multivariate gcd is ever taken.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num) : num_(std::move(num)) {  // NOLINT(google-explicit-constructor)
        den_ = Poly::constant(num_.table(), GaussRat(1));
    }
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const VarTablePtr& t, GaussRat c) {
        return RatFunc(Poly::constant(t, std::move(c)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RatFunc operator-() const { return RatFunc::raw(-num_, den_); }
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc pow(unsigned e) const;

    /// Cross-multiplied exact equality.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const;

private:
    static RatFunc raw(Poly num, Poly den) {
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }
    Poly num_, den_;
};

/// Ring-homomorphism evaluation of p under variable -> RatFunc images over
/// `target`. Every variable occurring in p must be mapped; the result
/// denominator is the unreduced product of image denominators.
RatFunc substitute_hom(const Poly& p, const std::map<std::string, RatFunc>& map,
                       const VarTablePtr& target);

} // namespace bidegree

#endif
