#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bidegree/families.hpp"
#include "bidegree/geomcheck.hpp"
#include "fixtures.hpp"

using namespace bidegree;

TEST_CASE("double cone over the quadric") {
    auto t = fixtures::cone_table();
    Poly q = fixtures::quadric(t);
    DegenerationFamily fam = build_family(FamilyVariant::DoubleCone, {3, 1, 0, 0}, {q});
    CHECK(fam.params.d == 2);
    CHECK(fam.params.f == 2);
    CHECK(fam.regime == "n>=r+2");
    CHECK(fam.eqs[0] == parse_poly("a*b + t*y0^2", t));
    CHECK(fam.eqs[1] == q + parse_poly("y0*x0^2*a + y1*x1^2*b", t));
    CHECK(fam.eqs[0].bidegree() == Bidegree{2, 0});
    CHECK(fam.eqs[1].bidegree() == Bidegree{2, 2});
    CHECK(fam.intersection == q);

    FiberSplit split = special_fiber_split(fam);
    CHECK(split.cert.passed());
    CHECK(split.y0_component == q + parse_poly("y0*x0^2*a", t));
    CHECK(split.y1_component == q + parse_poly("y1*x1^2*b", t));
    CHECK(split.intersection == q);
    CHECK(fam.eqs[1].set_zero("b") == split.y0_component);
    CHECK(fam.eqs[1].set_zero("a") == split.y1_component);
}

TEST_CASE("double cone parameter bounds") {
    auto t = fixtures::cone_table();
    CHECK_THROWS_AS(
        build_family(FamilyVariant::DoubleCone, {}, {parse_poly("y0^2*x0", t)}),
        BadParams);  // f = 1
    CHECK_THROWS_AS(
        build_family(FamilyVariant::DoubleCone, {}, {parse_poly("y0*x0^2", t)}),
        BadParams);  // d = 1
    CHECK_THROWS_AS(
        build_family(FamilyVariant::DoubleCone, {0, 0, 3, 2}, {fixtures::quadric(t)}),
        SeedDegreeMismatch);  // declared (3,2) vs actual (2,2)
    CHECK_THROWS_AS(
        build_family(FamilyVariant::DoubleCone, {}, {parse_poly("y0^2*x0^2 + a*y0*x1^2", t)}),
        SeedDegreeMismatch);  // seed uses the auxiliary coordinate
    CHECK_THROWS_AS(build_family(FamilyVariant::DoubleCone, {2, 3, 0, 0},
                                 {fixtures::quadric(t)}),
                    BadParams);  // n < r+1
}

TEST_CASE("first quadric degeneration with a mixed-block pair") {
    auto t = VarTable::make({{"y0", Grade::Y},
                             {"y1", Grade::Y},
                             {"y2", Grade::Y},
                             {"a", Grade::Y},
                             {"x0", Grade::X},
                             {"x1", Grade::X},
                             {"x2", Grade::X},
                             {"b", Grade::X},
                             {"t", Grade::Param}});
    Poly f22 = parse_poly("y0*y1*x0*x1 + y2^2*x2^2", t);
    DegenerationFamily fam = build_family(FamilyVariant::Kuechle, {}, {f22});
    CHECK(fam.eqs[0] == parse_poly("a*b + t*x0*y0", t));
    CHECK(fam.eqs[1] == f22 + parse_poly("y0*x0^2*a + y1^2*x1*b", t));
    CHECK(fam.eqs[0].bidegree() == Bidegree{1, 1});
    CHECK(fam.eqs[1].bidegree() == Bidegree{2, 2});
    CHECK(special_fiber_split(fam).cert.passed());
}

TEST_CASE("the (3,2) degeneration") {
    auto t = fixtures::threetwo_table();
    Poly g = fixtures::cubic_seed(t);
    DegenerationFamily fam =
        build_family(FamilyVariant::ThreeTwo, {}, {g}, {"y2", "X2"});
    CHECK(fam.eqs[0] == parse_poly("c*d + s*y1^2", t));
    CHECK(fam.eqs[1] == g + parse_poly("y1^2*x1^2*c + y0^2*x0^2*d", t));
    CHECK(fam.eqs[0].bidegree() == Bidegree{2, 0});
    CHECK(fam.eqs[1].bidegree() == Bidegree{3, 2});
    CHECK(fam.boundary.boundary.count("y2") == 1);
    CHECK(fam.boundary.invertibles.count("X2") == 1);

    FiberSplit split = special_fiber_split(fam);
    CHECK(split.cert.passed());
    CHECK(split.intersection == g);
    CHECK(split.y0_component == g + parse_poly("y1^2*x1^2*c", t));

    CHECK_THROWS_AS(
        build_family(FamilyVariant::ThreeTwo, {}, {parse_poly("y0^2*x0^2", t)}),
        BadParams);  // needs a (3,2) seed
}

TEST_CASE("degree raising") {
    auto t = fixtures::cone_table();
    Poly g = fixtures::quadric(t);
    Poly h = parse_poly("y0^3*x1^3 + y1^2*y2*x2^3 + y0*y1*y2*x0*x2^2", t);
    DegenerationFamily fam =
        build_family(FamilyVariant::DegreeRaise, {}, {g, h});
    CHECK(fam.params.d2 == 3);
    CHECK(fam.params.f2 == 3);
    REQUIRE(fam.eqs.size() == 1);
    CHECK(fam.eqs[0] == parse_poly("t", t) * h - g * parse_poly("y0*x0", t));
    CHECK(fam.eqs[0].bidegree() == Bidegree{3, 3});
    FiberSplit split = special_fiber_split(fam);
    CHECK(split.cert.passed());
    CHECK(fam.eqs[0].set_zero("t") == -(g * parse_poly("y0*x0", t)));

    FamilySeeds swapped{h, g};
    CHECK_THROWS_AS(build_family(FamilyVariant::DegreeRaise, {}, swapped), BadParams);
    CHECK_THROWS_AS(build_family(FamilyVariant::DegreeRaise, {}, {g}), BadParams);
}

TEST_CASE("reduction to one projective block") {
    auto t = VarTable::make({{"y0", Grade::Y},
                             {"y1", Grade::Y},
                             {"x0", Grade::X},
                             {"x1", Grade::X},
                             {"x2", Grade::X},
                             {"x3", Grade::X},
                             {"t", Grade::Param}});
    FamilySeeds seeds;
    seeds.G = Poly::zero(t);
    seeds.cubic = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", t);
    seeds.M = parse_poly("x0*x1 + x2^2 + x3^2", t);
    seeds.L = parse_poly("x1^2 + x0*x3", t);
    DegenerationFamily fam = build_family(FamilyVariant::CubicReduction, {}, seeds);
    REQUIRE(fam.eqs.size() == 2);
    CHECK(fam.eqs[0] ==
          parse_poly("y0*y1", t) * *seeds.cubic + parse_poly("y1^2*x0", t) * *seeds.M -
              parse_poly("t*y0^2*x0", t) * *seeds.L);
    CHECK(fam.eqs[0].bidegree() == Bidegree{2, 3});
    // the single-block quartic lives over its own table
    const VarTablePtr& qt = fam.eqs[1].table();
    CHECK(qt->has("xr1"));
    CHECK_FALSE(qt->has("y0"));
    CHECK(fam.eqs[1].bidegree() == Bidegree{0, 4});
    CHECK(special_fiber_split(fam).cert.passed());

    FamilySeeds bad = seeds;
    bad.M = parse_poly("x0", t);
    CHECK_THROWS_AS(build_family(FamilyVariant::CubicReduction, {}, bad),
                    SeedDegreeMismatch);
}

TEST_CASE("divisor hypothesis on linear coordinates") {
    auto t = fixtures::cone_table();
    Poly q = fixtures::quadric(t);
    DegenerationFamily fam = build_family(FamilyVariant::DoubleCone, {}, {q});

    Certificate cert = ch1_hypothesis_check(fam.component0, "a", fam.boundary);
    CHECK(cert.passed());
    bool saw_y0 = false, saw_x0 = false;
    for (const auto& line : cert.trace) {
        if (line.find("{y0 = 0}") != std::string::npos) saw_y0 = true;
        if (line.find("{x0 = 0}") != std::string::npos) saw_x0 = true;
    }
    CHECK(saw_y0);
    CHECK(saw_x0);

    CHECK_THROWS_AS(ch1_hypothesis_check(q, "x3", fam.boundary), NotLinearInVariable);

    ChartSpec narrow = ChartSpec::make({}, {"y1", "x1"});
    CHECK(ch1_hypothesis_check(fam.component0, "a", narrow).verdict == Verdict::Fail);
}

TEST_CASE("divisor hypothesis for the mixed-block variant") {
    auto t = VarTable::make({{"y0", Grade::Y},
                             {"y1", Grade::Y},
                             {"y2", Grade::Y},
                             {"a", Grade::Y},
                             {"x0", Grade::X},
                             {"x1", Grade::X},
                             {"x2", Grade::X},
                             {"b", Grade::X},
                             {"t", Grade::Param}});
    Poly f22 = parse_poly("y0*y1*x0*x1 + y2^2*x2^2", t);
    DegenerationFamily fam = build_family(FamilyVariant::Kuechle, {}, {f22});
    CHECK(ch1_hypothesis_check(fam.component0, "a", fam.boundary).passed());
    // distinguished variable from the other block also works
    CHECK(ch1_hypothesis_check(fam.component1, "b", fam.boundary).passed());
}

TEST_CASE("divisor hypothesis survives boundary-monomial rescaling") {
    auto t = fixtures::cone_table();
    Poly q = fixtures::quadric(t);
    DegenerationFamily fam = build_family(FamilyVariant::DoubleCone, {}, {q});
    std::mt19937 rng(12);
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (int k = 0; k < 10; ++k) {
        Poly mono = parse_poly("y0", t).pow(e(rng)) * parse_poly("x1", t).pow(e(rng)) *
                    parse_poly("y1", t).pow(e(rng));
        Poly p = fam.component0.coeff_of_power("a", 1);
        Poly rescaled = fam.component0.coeff_of_power("a", 0) +
                        p * mono * Poly::variable(t, "a");
        CHECK(ch1_hypothesis_check(rescaled, "a", fam.boundary).passed());
    }
}

TEST_CASE("perturbed fiber equation still splits") {
    auto t = fixtures::cone_table();
    Poly q = fixtures::quadric(t);
    DegenerationFamily fam = build_family(FamilyVariant::DoubleCone, {}, {q});
    fam.eqs[0] = parse_poly("a*b + t*y0*y1", t);
    CHECK(special_fiber_split(fam).cert.passed());

    fam.eqs[0] = parse_poly("a*b + y0^2", t);  // parameter-independent: no split
    CHECK_THROWS_AS(special_fiber_split(fam), FactorizationFails);
}

TEST_CASE("random double cones are semistable on the standard chart") {
    auto t = fixtures::cone_table();
    std::mt19937 rng(424242);  // recorded seed
    std::uniform_int_distribution<int> coeff(1, 9);
    std::uniform_int_distribution<std::size_t> yv(0, 2), xv(5, 8);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + trial % 2, f = 2 + (trial / 2) % 2;
        Poly g(t);
        for (int term = 0; term < 4; ++term) {
            Monomial m(t->size());
            for (int j = 0; j < d; ++j) ++m.exps[yv(rng)];
            for (int j = 0; j < f; ++j) ++m.exps[xv(rng)];
            g.add_term(m, GaussRat(Rational(coeff(rng))));
        }
        if (g.is_zero()) continue;
        DegenerationFamily fam = build_family(FamilyVariant::DoubleCone, {}, {g});
        ChartSpec chart = ChartSpec::make({"y0", "x0"}, fam.boundary.boundary);
        Certificate cert = semistability_check(fam, chart, {"a", "t"},
                                               {{0, "a"}, {1, "b"}});
        CHECK(cert.passed());
    }
}
