#include "bidegree/gauss.hpp"

namespace bidegree {

std::string GaussRat::str() const {
    auto rat = [](const Rational& r) {
        std::string s = numerator(r).str();
        if (denominator(r) != 1) s += "/" + denominator(r).str();
        return s;
    };
    if (im == 0) return rat(re);
    std::string i = im == 1 ? "i" : im == -1 ? "-i" : rat(im) + "*i";
    if (re == 0) return i;
    if (im > 0) return rat(re) + "+" + i;
    return rat(re) + i;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt n = numerator(r), d = denominator(r);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& c) {
    if (c.is_zero()) return GaussRat(0);
    if (c.im == 0) {
        if (auto r = rational_sqrt(c.re)) return GaussRat(*r);
        if (auto r = rational_sqrt(-c.re)) return GaussRat(Rational(0), *r);
        return std::nullopt;
    }
    // x+yi with x^2-y^2 = re, 2xy = im; x^2 = (re + |c|)/2.
    auto m = rational_sqrt(c.norm());
    if (!m) return std::nullopt;
    Rational x2 = (c.re + *m) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    return GaussRat(*x, c.im / (2 * *x));
}

} // namespace bidegree
