#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace rjc;
using rjc::testing::bp;
using rjc::testing::random_bpoly;
using rjc::testing::random_rat;
using rjc::testing::rng;

TEST_CASE("rational arithmetic is canonical") {
    Rat a(2, 6);
    CHECK(a == Rat(1, 3));
    CHECK(a.num() == 1);
    CHECK(a.den() == 3);
    Rat b(-4, -8);
    CHECK(b == Rat(1, 2));
    CHECK(b.den() == 2);
    CHECK((a + b).to_string() == "5/6");
    CHECK(Rat(3, -4).to_string() == "-3/4");
    CHECK_THROWS_AS(Rat(1, 0), DenominatorZero);
    CHECK(Rat::from_string("-7/14") == Rat(-1, 2));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("product of sum and difference") {
    BPoly x = BPoly::variable(Var::x), y = BPoly::variable(Var::y);
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("additive identity") {
    BPoly p = bp("y + x^2*y^2");
    CHECK(p + BPoly() == p);
}

TEST_CASE("squaring expands term by term") {
    // (y + x y^2)^2 against the hand expansion
    BPoly p = bp("y + x*y^2");
    CHECK(p.pow(2) == bp("y^2 + 2*x*y^3 + x^2*y^4"));
}

TEST_CASE("partial derivatives") {
    CHECK(bp("y + x^2*y^2").derivative(Var::y) == bp("1 + 2*x^2*y"));
    CHECK(BPoly(Rat(5)).derivative(Var::x).is_zero());
    CHECK(bp("y + x*y^2 + y^4").derivative(Var::x) == bp("y^2"));
}

TEST_CASE("evaluation") {
    CHECK(bp("y + x^2*y^2").eval(0, 0) == Rat(0));
    CHECK(bp("1 + 2*x^2*y").eval(Rat(1), Rat(-1)) == Rat(-1));
    CHECK(bp("x^2 - y^2").eval(Rat(3), Rat(2)) == Rat(5));
}

TEST_CASE("affine substitution") {
    BPoly p = bp("x^2 + y^2");
    CHECK(affine_substitute(p, AffineMap::identity()) == p);

    // T(x,y) = (x-y, x+y) turns x^2 y^2 into ((x-y)(x+y))^2 = (x^2-y^2)^2
    AffineMap T(1, -1, 1, 1, 0, 0);
    BPoly q = affine_substitute(bp("x^2*y^2"), T);
    CHECK(q == bp("(x^2 - y^2)^2"));

    CHECK(affine_substitute(bp("y"), AffineMap::translation(0, 1)) == bp("y + 1"));
}

TEST_CASE("coefficient extraction") {
    auto cs = bp("y^2 - x").coeffs_in(Var::y);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == UPoly::monomial(-1, 1));
    CHECK(cs[1].is_zero());
    CHECK(cs[2] == UPoly(1));

    CHECK(BPoly().coeffs_in(Var::x).empty());

    auto cs2 = bp("y + x*y^3").coeffs_in(Var::y);
    REQUIRE(cs2.size() == 4);
    CHECK(cs2[0].is_zero());
    CHECK(cs2[1] == UPoly(1));
    CHECK(cs2[2].is_zero());
    CHECK(cs2[3] == UPoly::monomial(1, 1));
}

TEST_CASE("homogeneous parts") {
    CHECK(bp("y + x^2*y^2").homogeneous_part(4) == bp("x^2*y^2"));
    CHECK(bp("y + x*y^2 + y^4").homogeneous_part(4) == bp("y^4"));
    CHECK(bp("x + y").homogeneous_part(4).is_zero());
}

TEST_CASE("ring laws on random inputs") {
    for (int i = 0; i < 60; ++i) {
        BPoly p = random_bpoly(3), q = random_bpoly(3), r = random_bpoly(3);
        CHECK((p + q) * r == p * r + q * r);
        if (!p.is_zero() && !q.is_zero())
            CHECK(*(p * q).total_degree() == *p.total_degree() + *q.total_degree());
    }
}

TEST_CASE("affine substitution round trips through the inverse") {
    for (int i = 0; i < 40; ++i) {
        BPoly p = random_bpoly(3);
        Rat a = random_rat(), b = random_rat(), c = random_rat(), d = random_rat();
        if ((a * d - b * c).is_zero()) continue;
        AffineMap T(a, b, c, d, random_rat(), random_rat());
        CHECK(affine_substitute(affine_substitute(p, T), T.inverse()) == p);

        Rat vx = random_rat(), vy = random_rat();
        auto [tx, ty] = T.apply(vx, vy);
        CHECK(affine_substitute(p, T).eval(vx, vy) == p.eval(tx, ty));
    }
}

TEST_CASE("mixed partials commute") {
    for (int i = 0; i < 40; ++i) {
        BPoly p = random_bpoly(4);
        CHECK(p.derivative(Var::x).derivative(Var::y) == p.derivative(Var::y).derivative(Var::x));
    }
}

TEST_CASE("upoly division and gcd") {
    UPoly x = UPoly::variable();
    UPoly u = (x - UPoly(1)) * (x - UPoly(1)) * (x - UPoly(2));
    auto [q, r] = UPoly::divrem(u, x - UPoly(2));
    CHECK(r.is_zero());
    CHECK(q == (x - UPoly(1)) * (x - UPoly(1)));
    CHECK(UPoly::gcd(u, (x - UPoly(1)) * (x - UPoly(3))) == x - UPoly(1));
    CHECK_THROWS_AS(UPoly::divrem(u, UPoly()), ZeroPolynomial);
}

TEST_CASE("degree sentinel for the zero polynomial") {
    CHECK_FALSE(UPoly().degree().has_value());
    CHECK(UPoly().lc() == Rat(0));
    CHECK_FALSE(BPoly().total_degree().has_value());
}
