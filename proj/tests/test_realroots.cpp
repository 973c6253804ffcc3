#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rjc/realroots.hpp"
#include "test_helpers.hpp"

using namespace rjc;
using rjc::testing::random_nonzero_upoly;
using rjc::testing::random_rat;
using rjc::testing::rng;

namespace {
UPoly X = UPoly::variable();
UPoly lin(long r) { return X - UPoly(Rat(r)); }  // x - r
}  // namespace

TEST_CASE("squarefree decomposition") {
    UPoly u = lin(1) * lin(1) * lin(2);
    auto dec = squarefree_decomposition(u);
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0] == std::make_pair(lin(2), 1));
    CHECK(dec.parts[1] == std::make_pair(lin(1), 2));
    CHECK(dec.lead == Rat(1));

    UPoly v = X * X + UPoly(1);
    auto dv = squarefree_decomposition(v);
    REQUIRE(dv.parts.size() == 1);
    CHECK(dv.parts[0] == std::make_pair(v, 1));

    auto dw = squarefree_decomposition(lin(1).pow(4));
    REQUIRE(dw.parts.size() == 1);
    CHECK(dw.parts[0] == std::make_pair(lin(1), 4));

    CHECK_THROWS_AS(squarefree_decomposition(UPoly()), ZeroPolynomial);
}

TEST_CASE("counting real roots") {
    UPoly u = X * X - UPoly(2);
    CHECK(count_real_roots(u, std::make_pair(Rat(0), Rat(2))) == 1);
    CHECK(count_real_roots(X * X + UPoly(1)) == 0);
    CHECK(count_real_roots(X * X * X - X) == 3);
}

TEST_CASE("endpoint root detection") {
    UPoly u = X * (X - UPoly(1));
    CHECK_THROWS_AS(count_real_roots(u, std::make_pair(Rat(0), Rat(5))), EndpointIsRoot);
}

TEST_CASE("isolating sqrt(2)") {
    UPoly u = X * X - UPoly(2);
    auto roots = isolate_roots(u);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
    auto fine = refine(u, roots[1], Rat(1, 1000000));
    CHECK(fine.width() < Rat(1, 1000000));
    // 1.41421356... lies inside
    CHECK(fine.lo < Rat(14142136, 10000000));
    CHECK(fine.hi > Rat(14142135, 10000000));
}

TEST_CASE("isolation reports multiplicity") {
    auto roots = isolate_roots(lin(1) * lin(1));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[0].lo < Rat(1));
    CHECK(roots[0].hi > Rat(1));

    CHECK(isolate_roots(X * X + X + UPoly(1)).empty());
}

TEST_CASE("sign certificates") {
    CHECK(sign_certificate(X * X).tag == SignCertificate::Tag::NonnegativeEverywhere);
    CHECK(sign_certificate(UPoly()).tag == SignCertificate::Tag::IdenticallyZero);

    auto c = sign_certificate(X * X * X - X * X);
    REQUIRE(c.tag == SignCertificate::Tag::NegativeWitness);
    CHECK((X * X * X - X * X).eval(*c.witness) < Rat(0));
}

TEST_CASE("sign at an algebraic root") {
    UPoly v = X * X - UPoly(2);
    auto root = isolate_roots(v)[1];  // sqrt(2)
    CHECK(sign_at_root(X, v, root) == 1);
    CHECK(sign_at_root(v, v, root) == 0);
    CHECK(sign_at_root(X * X - UPoly(3), v, root) == -1);
}

TEST_CASE("root count equals interval count on random polynomials") {
    for (int i = 0; i < 500; ++i) {
        UPoly u = random_nonzero_upoly(12);
        if (u.is_constant()) continue;
        auto roots = isolate_roots(u);
        CHECK(count_real_roots(u) == static_cast<int>(roots.size()));
        // multiplicities + conjugate pairs account for the whole degree
        int mult_sum = 0;
        for (const auto& iv : roots) mult_sum += iv.multiplicity;
        CHECK((u.deg() - mult_sum) % 2 == 0);
        CHECK(mult_sum <= u.deg());
    }
}

TEST_CASE("sign trichotomy on random polynomials") {
    for (int i = 0; i < 200; ++i) {
        UPoly u = random_nonzero_upoly(8);
        auto cu = sign_certificate(u);
        auto cn = sign_certificate(-u);
        bool u_nonneg = cu.tag == SignCertificate::Tag::NonnegativeEverywhere;
        bool n_nonneg = cn.tag == SignCertificate::Tag::NonnegativeEverywhere;
        // for u not identically zero, u >= 0 and -u >= 0 cannot both hold
        CHECK_FALSE((u_nonneg && n_nonneg));
        if (cu.tag == SignCertificate::Tag::NegativeWitness) CHECK(u.eval(*cu.witness) < Rat(0));
        if (cn.tag == SignCertificate::Tag::NegativeWitness) CHECK(u.eval(*cn.witness) > Rat(0));
    }
}

TEST_CASE("rational root extraction") {
    UPoly u = (UPoly(Rat(3)) * X - UPoly(1)) * (X * X - UPoly(2));
    auto roots = isolate_roots(u);
    REQUIRE(roots.size() == 3);
    int rational_hits = 0;
    for (const auto& iv : roots) {
        if (auto r = rational_root_in(u, iv)) {
            ++rational_hits;
            CHECK(*r == Rat(1, 3));
        }
    }
    CHECK(rational_hits == 1);
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
    CHECK(simplest_rational_between(Rat(-1), Rat(1)) == Rat(0));
    CHECK(simplest_rational_between(Rat(2), Rat(7, 2)) == Rat(3));
    CHECK(simplest_rational_between(Rat(5, 2), Rat(13, 5)) == Rat(18, 7));
    for (int i = 0; i < 100; ++i) {
        Rat a = random_rat(-20, 20, 30);
        Rat b = a + Rat(1, 1 + (i % 17));
        Rat s = simplest_rational_between(a, b);
        CHECK(a < s);
        CHECK(s < b);
    }
}

TEST_CASE("interval bounds on polynomial magnitude") {
    UPoly u = X * X - UPoly(2);
    Rat up = poly_abs_upper_bound(u, Rat(0), Rat(1));
    CHECK(up >= Rat(2));
    Rat lo = poly_abs_lower_bound(u, Rat(0), Rat(1));
    CHECK(lo > Rat(0));
    CHECK(lo <= Rat(1));  // |u| reaches 1 at x = 1
}
