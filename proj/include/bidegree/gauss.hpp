#ifndef BIDEGREE_GAUSS_HPP
#define BIDEGREE_GAUSS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "bidegree/errors.hpp"

namespace bidegree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of Q(i): re + im*i with exact rational parts. cpp_rational keeps
/// both parts canonically reduced with positive denominator.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(long n) : re(n) {}                       // NOLINT(google-explicit-constructor)
    GaussRat(Rational r) : re(std::move(r)) {}        // NOLINT(google-explicit-constructor)
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat imaginary_unit() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat conj() const { return GaussRat(re, -im); }
    Rational norm() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const {
        if (is_zero()) throw DivideByZero();
        Rational n = norm();
        return GaussRat(re / n, -im / n);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

    std::string str() const;
};

/// Exact square root in Q(i) when one exists (norm must be a rational square).
std::optional<GaussRat> gauss_sqrt(const GaussRat& c);

std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace bidegree

#endif
