#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bidegree/parse.hpp"
#include "bidegree/ratfunc.hpp"

using namespace bidegree;

namespace {

VarTablePtr hpt_table() {
    return VarTable::make({{"y0", Grade::Y},
                           {"y1", Grade::Y},
                           {"y2", Grade::Y},
                           {"x0", Grade::X},
                           {"x1", Grade::X},
                           {"x2", Grade::X},
                           {"x3", Grade::X},
                           {"t", Grade::Param},
                           {"s", Grade::Param}});
}

const char* kQuadricSrc =
    "y1*y2*x0^2 + y0*y2*x1^2 + y0*y1*x2^2 + "
    "(y0^2+y1^2+y2^2-2*(y0*y1+y0*y2+y1*y2))*x3^2";

GaussRat random_coeff(std::mt19937& rng, bool allow_imaginary = true) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational re(num(rng), den(rng));
    Rational im = 0;
    if (allow_imaginary && num(rng) > 2) im = Rational(num(rng), den(rng));
    return GaussRat(re, im);
}

Poly random_poly(std::mt19937& rng, const VarTablePtr& t) {
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<unsigned> exp(0, 2);
    Poly p(t);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m(t->size());
        for (auto& e : m.exps) e = exp(rng);
        p.add_term(m, random_coeff(rng));
    }
    return p;
}

Poly random_nonzero(std::mt19937& rng, const VarTablePtr& t) {
    for (;;) {
        Poly p = random_poly(rng, t);
        if (!p.is_zero()) return p;
    }
}

// One random term of exact bidegree (dy, dx).
Poly random_bihom(std::mt19937& rng, const VarTablePtr& t, int dy, int dx, int terms) {
    Poly p(t);
    std::uniform_int_distribution<std::size_t> yv(0, 2), xv(3, 6);
    for (int k = 0; k < terms; ++k) {
        Monomial m(t->size());
        for (int j = 0; j < dy; ++j) ++m.exps[yv(rng)];
        for (int j = 0; j < dx; ++j) ++m.exps[xv(rng)];
        p.add_term(m, random_coeff(rng));
    }
    if (p.is_zero()) {
        Monomial m(t->size());
        m.exps[0] = static_cast<unsigned>(dy);
        m.exps[3] = static_cast<unsigned>(dx);
        p.add_term(m, GaussRat(1));
    }
    return p;
}

} // namespace

TEST_CASE("gaussian rational arithmetic and square roots") {
    GaussRat i = GaussRat::imaginary_unit();
    CHECK(i * i == GaussRat(-1));
    GaussRat z(Rational(1, 2), Rational(3));
    CHECK(z * z.inverse() == GaussRat(1));
    CHECK((z + z.conj()).is_real());
    CHECK(z.norm() == Rational(37, 4));

    CHECK(gauss_sqrt(GaussRat(Rational(-4))) == GaussRat(Rational(0), Rational(2)));
    CHECK(gauss_sqrt(GaussRat(Rational(0), Rational(2))) == GaussRat(Rational(1), Rational(1)));
    CHECK(gauss_sqrt(GaussRat(Rational(9, 4))) == GaussRat(Rational(3, 2)));
    CHECK(!gauss_sqrt(GaussRat(Rational(2))).has_value());
    CHECK(!gauss_sqrt(GaussRat(Rational(1), Rational(1))).has_value());
    CHECK(rational_sqrt(Rational(49, 9)) == Rational(7, 3));
    CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("parsing the (2,2) quadric") {
    auto t = hpt_table();
    Poly q = parse_poly(kQuadricSrc, t);
    CHECK(q.num_terms() == 9);
    CHECK(q.bidegree() == Bidegree{2, 2});
    CHECK(parse_poly(q.str(), t) == q);
}

TEST_CASE("parse corner cases and errors") {
    auto t = hpt_table();
    CHECK(parse_poly("0", t).is_zero());
    CHECK(parse_poly("3/2", t) == Poly::constant(t, GaussRat(Rational(3, 2))));
    CHECK(parse_poly("i*i", t) == Poly::constant(t, GaussRat(-1)));
    CHECK_THROWS_AS(parse_poly("y0 +", t), SyntaxError);
    CHECK_THROWS_AS(parse_poly("y0 y1", t), SyntaxError);
    CHECK_THROWS_AS(parse_poly("y0^99999", t), SyntaxError);
    CHECK_THROWS_AS(parse_poly("w0 + 1", t), UnknownVariable);
    try {
        parse_poly("y0 + @", t);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("hand-expanded binomial identity") {
    auto t = VarTable::make({{"u", Grade::Param}, {"v", Grade::Param}});
    Poly p = parse_poly("(u+v-1)^2 - 4*u*v", t);
    CHECK(p.num_terms() == 6);
    CHECK(p == parse_poly("u^2 + v^2 + 1 - 2*u*v - 2*u - 2*v", t));
}

TEST_CASE("ring laws on randomized triples") {
    auto t = hpt_table();
    std::mt19937 rng(12345);
    for (int k = 0; k < 50; ++k) {
        Poly a = random_poly(rng, t), b = random_poly(rng, t), c = random_poly(rng, t);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Poly::constant(t, GaussRat(1)) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("serialization round-trips") {
    auto t = hpt_table();
    std::mt19937 rng(777);
    for (int k = 0; k < 100; ++k) {
        Poly p = random_poly(rng, t);
        CHECK(parse_poly(p.str(), t) == p);
    }
}

TEST_CASE("bidegree is additive on products") {
    auto t = hpt_table();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> deg(0, 2), nt(1, 3);
    for (int k = 0; k < 50; ++k) {
        Poly p = random_bihom(rng, t, deg(rng), deg(rng), nt(rng));
        Poly q = random_bihom(rng, t, deg(rng), deg(rng), nt(rng));
        Poly pq = p * q;
        if (pq.is_zero()) continue;
        CHECK(pq.bidegree() == p.bidegree() + q.bidegree());
    }
    CHECK_THROWS_AS(parse_poly("y0*x0 + y0^2", t).bidegree(), NotBihomogeneous);
    CHECK_THROWS_AS(Poly::zero(t).bidegree(), ZeroPolynomial);
}

TEST_CASE("double cone equation keeps its bidegree") {
    auto t = VarTable::make({{"y0", Grade::Y},
                             {"y1", Grade::Y},
                             {"y2", Grade::Y},
                             {"a", Grade::Y},
                             {"b", Grade::Y},
                             {"x0", Grade::X},
                             {"x1", Grade::X},
                             {"x2", Grade::X}});
    Poly g = parse_poly("y0*y1*y2*x0^2 + y0^3*x1*x2 + y2^3*x2^2", t);
    CHECK(g.bidegree() == Bidegree{3, 2});
    Poly h = g + parse_poly("y0^2*x0^2*a + y1^2*x1^2*b", t);
    CHECK(h.bidegree() == Bidegree{3, 2});
}

TEST_CASE("exact division") {
    auto t = hpt_table();
    std::mt19937 rng(999);
    for (int k = 0; k < 100; ++k) {
        Poly f = random_poly(rng, t);
        Poly g = random_nonzero(rng, t);
        CHECK((f * g).exact_divide(g) == f);
    }
    CHECK_THROWS_AS(parse_poly("x0 + 1", t).exact_divide(parse_poly("x0", t)), NotDivisible);
    CHECK_THROWS_AS(parse_poly("x0", t).exact_divide(Poly::zero(t)), DivideByZero);
}

TEST_CASE("formal derivative satisfies Leibniz") {
    auto t = hpt_table();
    std::mt19937 rng(31337);
    for (int k = 0; k < 50; ++k) {
        Poly p = random_poly(rng, t), q = random_poly(rng, t);
        CHECK((p * q).derivative("x1") ==
              p.derivative("x1") * q + p * q.derivative("x1"));
    }
    CHECK(parse_poly("y0*x1^2", t).derivative("x1") == parse_poly("2*y0*x1", t));
}

TEST_CASE("substitution is a ring homomorphism") {
    auto t = hpt_table();
    std::mt19937 rng(5150);
    // monomial images keep the composite sizes bounded
    std::map<std::string, Poly> phi;
    std::uniform_int_distribution<unsigned> exp(0, 2);
    for (std::size_t i = 0; i < t->size(); ++i) {
        Monomial m(t->size());
        for (auto& e : m.exps) e = exp(rng) == 2 ? 1 : 0;
        phi[t->name(i)] = Poly::monomial(t, m, random_coeff(rng));
    }
    for (int k = 0; k < 30; ++k) {
        Poly p = random_poly(rng, t), q = random_poly(rng, t);
        CHECK((p + q).subst(phi, t) == p.subst(phi, t) + q.subst(phi, t));
        CHECK((p * q).subst(phi, t) == p.subst(phi, t) * q.subst(phi, t));
    }
}

TEST_CASE("identity substitution gives p over 1") {
    auto t = hpt_table();
    std::map<std::string, RatFunc> id;
    for (std::size_t i = 0; i < t->size(); ++i)
        id[t->name(i)] = RatFunc(Poly::variable(t, t->name(i)));
    Poly q = parse_poly(kQuadricSrc, t);
    RatFunc img = substitute_hom(q, id, t);
    CHECK(img.is_polynomial());
    CHECK(img.num() == q);
}

TEST_CASE("collapsing the dehomogenized quadric to one square") {
    auto t = hpt_table();
    Poly qu = parse_poly(kQuadricSrc, t).dehomogenize({"y1", "x0"});
    std::map<std::string, Poly> phi = {
        {"y0", Poly::constant(t, GaussRat(1))}, {"y2", Poly::zero(t)},
        {"x1", Poly::zero(t)},                  {"x2", Poly::variable(t, "x2")},
        {"x3", Poly::zero(t)},
    };
    CHECK(qu.subst(phi, t) == parse_poly("x2^2", t));
}

TEST_CASE("dehomogenize and rehomogenize") {
    auto t = hpt_table();
    Poly q = parse_poly(kQuadricSrc, t);
    Poly qu = q.dehomogenize({"y1", "x0"});
    CHECK(qu.rehomogenize("y1", "x0", {2, 2}) == q);
    Poly c = Poly::constant(t, GaussRat(7));
    CHECK(c.dehomogenize({"y0", "x0"}) == c);
    CHECK(parse_poly("y0^2*x0", t).dehomogenize({"y0", "x0"}) ==
          Poly::constant(t, GaussRat(1)));
}

TEST_CASE("partial derivative of the cubic seed on its standard chart") {
    auto t = VarTable::make({{"y0", Grade::Y},
                             {"y1", Grade::Y},
                             {"y2", Grade::Y},
                             {"a", Grade::Y},
                             {"x0", Grade::X},
                             {"x1", Grade::X},
                             {"X2", Grade::X},
                             {"x3", Grade::X},
                             {"t", Grade::Param}});
    Poly g = parse_poly(
        "y1^2*(y2+a)*x0^2 + y0*y2*y1*x1^2 + a*y0*(a-t*y0)*X2^2 + "
        "y1*(y0^2+y1^2+y2^2-2*(y0*y1+y0*y2+y1*y2))*x3^2",
        t);
    Poly gu = g.dehomogenize({"y1", "x0"});
    CHECK(gu.derivative("x1") == parse_poly("2*y0*y2*x1", t));
}

TEST_CASE("coefficient extraction and degree queries") {
    auto t = hpt_table();
    Poly q = parse_poly(kQuadricSrc, t);
    CHECK(q.degree_in("x3") == 2);
    CHECK(q.coeff_of_power("x3", 2) ==
          parse_poly("y0^2+y1^2+y2^2-2*(y0*y1+y0*y2+y1*y2)", t));
    CHECK(q.coeff_of_power("x3", 1).is_zero());
    CHECK(q.set_zero("x3") == parse_poly("y1*y2*x0^2 + y0*y2*x1^2 + y0*y1*x2^2", t));
}

TEST_CASE("monomial order selection changes leading terms") {
    auto lex = VarTable::make({{"x", Grade::X}, {"y", Grade::X}}, MonomialOrder::Lex);
    Poly p = parse_poly("x + y^3", lex);
    Monomial lm = p.leading_monomial();
    CHECK(lm.exps == std::vector<unsigned>{1, 0});

    auto grevlex = VarTable::make({{"x", Grade::X}, {"y", Grade::X}});
    Poly q = parse_poly("x + y^3", grevlex);
    CHECK(q.leading_monomial().exps == std::vector<unsigned>{0, 3});
}

TEST_CASE("variable tables reject duplicates and unknown names") {
    CHECK_THROWS_AS(VarTable::make({{"x", Grade::X}, {"x", Grade::Y}}), Error);
    auto t = hpt_table();
    CHECK_THROWS_AS(t->index("nope"), UnknownVariable);
    auto ext = t->extended("z_rab", Grade::Param);
    CHECK(ext->size() == t->size() + 1);
    CHECK(ext->has("z_rab"));
    Poly q = parse_poly(kQuadricSrc, t);
    CHECK(q.embed(ext).support_vars() == q.support_vars());
}
