#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rjc/subres.hpp"
#include "rjc/realroots.hpp"
#include "test_helpers.hpp"

using namespace rjc;
using rjc::testing::bp;
using rjc::testing::random_upoly;
using rjc::testing::rng;

namespace {

UPoly up(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return UPoly(std::move(c));
}

}  // namespace

TEST_CASE("sylvester layout for a quadratic pair") {
    BPoly p = bp("x^2 - 3*x + 2");
    BPoly q = bp("x^2 - 4*x + 3");
    SylvesterMatrix S = sylvester(p, q, Var::x);
    REQUIRE(S.n == 2);
    REQUIRE(S.m == 2);
    auto row = [&](int r) {
        std::vector<Rat> out;
        for (const auto& e : S.entries[r]) out.push_back(e.is_zero() ? Rat(0) : e.lc());
        return out;
    };
    CHECK(row(0) == std::vector<Rat>{1, -3, 2, 0});
    CHECK(row(1) == std::vector<Rat>{0, 1, -3, 2});
    CHECK(row(2) == std::vector<Rat>{0, 1, -4, 3});
    CHECK(row(3) == std::vector<Rat>{1, -4, 3, 0});
}

TEST_CASE("sylvester of equal polynomials has zero determinant") {
    BPoly p = bp("x^2 - 3*x + 2");
    CHECK(subresultant(p, p, Var::x, 0).is_zero());
}

TEST_CASE("sylvester shape for a mixed-degree pair") {
    BPoly p = bp("y^2 + x*y + 1");
    BPoly q = bp("y + 1");
    SylvesterMatrix S = sylvester(p, q, Var::y);
    CHECK(S.n == 2);
    CHECK(S.m == 1);
    CHECK(S.entries.size() == 3);
}

TEST_CASE("subresultants of the shifted quadratic pair") {
    BPoly p = bp("x^2 - 3*x + 2");
    BPoly q = bp("x^2 - 4*x + 3");
    CHECK(subresultant(p, q, Var::x, 0).is_zero());      // common root 1
    CHECK(subresultant(p, q, Var::x, 1) == UPoly(-1));   // single common root
    CHECK_THROWS_AS(subresultant(p, q, Var::x, 3), KOutOfRange);
}

TEST_CASE("closed forms match the defining expressions") {
    // constants: p = y^2+3y+2, q = y^2+4y+3 share the root -1
    auto [r0, r1] = r0_r1_quad_pair(UPoly(3), UPoly(2), UPoly(4), UPoly(3));
    CHECK(r1 == UPoly(1));
    CHECK(r0.is_zero());

    auto [z0, z1] = r0_r1_quad_pair(UPoly(), UPoly(), UPoly(), UPoly());
    CHECK(z0.is_zero());
    CHECK(z1.is_zero());

    // a=0, b=-1, c=x, d=0
    auto [s0, s1] = r0_r1_quad_pair(UPoly(), UPoly(-1), UPoly::variable(), UPoly());
    CHECK(s1 == UPoly::variable());
    CHECK(s0 == up({-1, 0, 1}));
}

TEST_CASE("quadratic-cubic closed forms") {
    // y^2 - 1 vs y^3: no common roots
    auto [r0, r1] = r0_r1_quad_cubic(UPoly(), UPoly(-1), UPoly(), UPoly(), UPoly());
    CHECK(r1 == UPoly(1));
    CHECK(r0 == UPoly(1));

    // y^2 - 1 vs y^3 - y: two common roots
    auto [s0, s1] = r0_r1_quad_cubic(UPoly(), UPoly(-1), UPoly(), UPoly(-1), UPoly());
    CHECK(s0.is_zero());
    CHECK(s1.is_zero());

    auto [z0, z1] = r0_r1_quad_cubic(UPoly(), UPoly(), UPoly(), UPoly(), UPoly());
    CHECK(z0.is_zero());
    CHECK(z1.is_zero());
}

TEST_CASE("closed forms agree with the determinant route on random pairs") {
    for (int i = 0; i < 200; ++i) {
        UPoly a = random_upoly(3), b = random_upoly(3), c = random_upoly(3), d = random_upoly(3);
        BPoly p = BPoly::variable(Var::y).pow(2) + BPoly::from_upoly(a, Var::x) * BPoly::variable(Var::y) +
                  BPoly::from_upoly(b, Var::x);
        BPoly q = BPoly::variable(Var::y).pow(2) + BPoly::from_upoly(c, Var::x) * BPoly::variable(Var::y) +
                  BPoly::from_upoly(d, Var::x);
        auto [r0, r1] = r0_r1_quad_pair(a, b, c, d);
        CHECK(subresultant(p, q, Var::y, 0) == r0);
        CHECK(subresultant(p, q, Var::y, 1) == r1);
    }
    for (int i = 0; i < 200; ++i) {
        UPoly a = random_upoly(3), b = random_upoly(3), c = random_upoly(3), d = random_upoly(3),
              e = random_upoly(3);
        BPoly y = BPoly::variable(Var::y);
        BPoly p = y.pow(2) + BPoly::from_upoly(a, Var::x) * y + BPoly::from_upoly(b, Var::x);
        BPoly q = y.pow(3) + BPoly::from_upoly(c, Var::x) * y.pow(2) +
                  BPoly::from_upoly(d, Var::x) * y + BPoly::from_upoly(e, Var::x);
        auto [r0, r1] = r0_r1_quad_cubic(a, b, c, d, e);
        CHECK(subresultant(p, q, Var::y, 0) == r0);
        CHECK(subresultant(p, q, Var::y, 1) == r1);
    }
}

TEST_CASE("common root count on crafted pairs") {
    UPoly x = UPoly::variable();
    UPoly p = (x - UPoly(1)).pow(2) * (x - UPoly(2));
    UPoly q = (x - UPoly(1)).pow(2) * (x - UPoly(3));
    CHECK(common_root_count(p, q) == 2);

    CHECK(common_root_count(x * x + UPoly(1), x - UPoly(5)) == 0);

    UPoly m = x.pow(4) + UPoly(2) * x + UPoly(7);
    CHECK(common_root_count(m, m) == 4);

    CHECK_THROWS_AS(common_root_count(UPoly(), x), ZeroLeadingCoefficient);
}

TEST_CASE("common root count equals gcd degree on random planted pairs") {
    UPoly x = UPoly::variable();
    for (int i = 0; i < 500; ++i) {
        std::uniform_int_distribution<int> gd(0, 4);
        int planted = gd(rng());
        UPoly g(Rat(1));
        for (int t = 0; t < planted; ++t) g = g * (x - UPoly(rjc::testing::random_rat(-4, 4, 2)));
        UPoly p = g * rjc::testing::random_nonzero_upoly(3);
        UPoly q = g * rjc::testing::random_nonzero_upoly(3);
        int expect = UPoly::gcd(p, q).deg();
        CHECK(common_root_count(p, q) == expect);
    }
}

TEST_CASE("subresultants of swapped arguments agree up to sign") {
    for (int i = 0; i < 50; ++i) {
        UPoly a = random_upoly(2), b = random_upoly(2), c = random_upoly(2), d = random_upoly(2);
        BPoly y = BPoly::variable(Var::y);
        BPoly p = y.pow(2) + BPoly::from_upoly(a, Var::x) * y + BPoly::from_upoly(b, Var::x);
        BPoly q = y.pow(2) + BPoly::from_upoly(c, Var::x) * y + BPoly::from_upoly(d, Var::x);
        for (int k = 0; k <= 2; ++k) {
            UPoly rpq = subresultant(p, q, Var::y, k);
            UPoly rqp = subresultant(q, p, Var::y, k);
            CHECK((rpq == rqp || rpq == -rqp));
        }
    }
}

TEST_CASE("even-order derivative vanishing propagates") {
    // R = h * (-f^2 + (A f - B g) g) with A^2 - 4B < 0 and h(alpha) != 0:
    // whenever R and its derivatives through order 2i vanish at alpha, so
    // does order 2i+1. Checked by exact differentiation on random data.
    for (int i = 0; i < 120; ++i) {
        UPoly f = random_upoly(3), g = random_upoly(3), h = random_upoly(2);
        Rat A = rjc::testing::random_rat(-4, 4, 2);
        Rat B = (A * A + Rat(1 + i % 5)) / Rat(4) + Rat(1, 7);  // forces A^2 - 4B < 0
        Rat alpha = rjc::testing::random_rat(-3, 3, 2);
        if (h.eval(alpha).is_zero()) continue;
        UPoly R = h * (-(f * f) + (A * f - B * g) * g);
        int order = 0;
        UPoly cur = R;
        while (cur.eval(alpha).is_zero() && order < 12) {
            cur = cur.derivative();
            ++order;
        }
        // the first nonvanishing derivative order is even
        CHECK(order % 2 == 0);
    }
}
