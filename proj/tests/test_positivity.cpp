#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rjc/positivity.hpp"
#include "test_helpers.hpp"

using namespace rjc;
using rjc::testing::random_rat;
using rjc::testing::rng;

TEST_CASE("alpha values") {
    CHECK(alpha(-1, 1) == Rat(1));
    CHECK(alpha(-1, 5) == Rat(1));
    CHECK(alpha(0, 1) == Rat(-4, 3));
    CHECK(alpha(1, 1) == Rat(8, 3));
}

TEST_CASE("hankel matrix structure") {
    HankelMatrix H = hankel(1, 1);
    REQUIRE(H.entries.size() == 2);
    CHECK(H.entries[0][0] == Rat(8, 3));
    CHECK(H.entries[0][1] == Rat(-4, 3));
    CHECK(H.entries[1][0] == Rat(-4, 3));
    CHECK(H.entries[1][1] == Rat(1));

    HankelMatrix H22 = hankel(2, 2);
    // constant anti-diagonals; bottom-right is 1
    CHECK(H22.entries[2][2] == Rat(1));
    CHECK(H22.entries[0][2] == H22.entries[1][1]);
    CHECK(H22.entries[1][1] == H22.entries[2][0]);

    CHECK_THROWS_AS(hankel(0, 1), BadIndices);
    CHECK_THROWS_AS(hankel(3, 2), BadIndices);
}

TEST_CASE("exact determinants") {
    CHECK(det_exact(hankel(1, 1).entries) == Rat(8, 9));
    std::vector<std::vector<Rat>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(det_exact(id3) == Rat(1));
    std::vector<std::vector<Rat>> rep = {{1, 2, 3}, {1, 2, 3}, {0, 1, 4}};
    CHECK(det_exact(rep) == Rat(0));
    std::vector<std::vector<Rat>> bad = {{1, 2}, {3, 4}, {5, 6}};
    CHECK_THROWS_AS(det_exact(bad), NotSquare);
}

TEST_CASE("hankel determinants and minors are positive up to k = 8") {
    for (int k = 1; k <= 8; ++k) {
        for (int j = 1; j <= k; ++j) CHECK(det_exact(hankel(j, k).entries) > Rat(0));
        for (const Rat& m : leading_minors(hankel(k, k).entries)) CHECK(m > Rat(0));
    }
    auto minors = leading_minors(hankel(1, 1).entries);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == Rat(8, 3));
    CHECK(minors[1] == Rat(8, 9));
    CHECK(leading_minors(hankel(3, 5).entries).size() == 4);
}

TEST_CASE("alpha recursion identity") {
    for (int k = 2; k <= 8; ++k)
        for (int i = 1; i <= 2 * k - 3; ++i) CHECK(alpha(i, k) == alpha(1, k) * alpha(i - 2, k - 1));
}

TEST_CASE("witnesses for the sign-indefinite polynomial family") {
    auto z = bruna_witnesses({Rat(0), Rat(0), Rat(0)});
    CHECK(z.is_zero);

    auto w = bruna_witnesses({Rat(1)});
    REQUIRE_FALSE(w.is_zero);
    UPoly L = l_poly({Rat(1)});
    CHECK(L.eval(*w.theta1) < Rat(0));
    CHECK(L.eval(*w.theta2) > Rat(0));
    // L = 2 theta + 1 here
    CHECK(L == UPoly(std::vector<Rat>{Rat(1), Rat(2)}));

    auto v = bruna_witnesses({Rat(1), Rat(0), Rat(-1)});
    REQUIRE_FALSE(v.is_zero);
    UPoly Lv = l_poly({Rat(1), Rat(0), Rat(-1)});
    CHECK(Lv.eval(*v.theta1) < Rat(0));
    CHECK(Lv.eval(*v.theta2) > Rat(0));
    CHECK(Lv.eval(Rat(1)) == Rat(-8));
}

TEST_CASE("witnesses exist for many random nonzero coefficient vectors") {
    std::uniform_int_distribution<int> len(1, 10);
    for (int i = 0; i < 500; ++i) {
        std::vector<Rat> b(len(rng()));
        bool nonzero = false;
        for (auto& x : b) {
            x = random_rat(-6, 6, 3);
            nonzero = nonzero || !x.is_zero();
        }
        if (!nonzero) b[0] = Rat(1);
        auto w = bruna_witnesses(b);
        REQUIRE_FALSE(w.is_zero);
        UPoly L = l_poly(b);
        CHECK(L.eval(*w.theta1) < Rat(0));
        CHECK(L.eval(*w.theta2) > Rat(0));
    }
}

TEST_CASE("b coefficients from squares") {
    // k = 1, symbolic checks at sampled points
    for (int i = 0; i < 50; ++i) {
        Rat a0 = random_rat(), a1 = random_rat();
        auto b = b_from_squares({{a0, a1}, {Rat(0), Rat(0)}});
        REQUIRE(b.size() == 2);
        CHECK(b[0] == a0 * a0);
        CHECK(b[1] == Rat(2, 3) * (a0 * a1 - a0 * a0));
    }
    auto zero = b_from_squares({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
    CHECK(zero == std::vector<Rat>{Rat(0), Rat(0)});
    auto ones = b_from_squares({{Rat(1), Rat(1)}, {Rat(0), Rat(0)}});
    CHECK(ones == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK_THROWS_AS(b_from_squares({{Rat(1)}, {Rat(1)}}), BadLength);
}

TEST_CASE("recurrence consistency for random squares") {
    std::uniform_int_distribution<int> kk(1, 5);
    for (int i = 0; i < 200; ++i) {
        int k = kk(rng());
        SquaresInput in;
        in.a.resize(k + 1);
        in.c.resize(k + 1);
        for (auto& x : in.a) x = random_rat(-5, 5, 3);
        for (auto& x : in.c) x = random_rat(-5, 5, 3);
        auto b = b_from_squares(in);
        auto conv = [&](int d) {
            Rat s(0);
            for (int r = 0; r <= d; ++r) {
                int t = d - r;
                if (r > k || t > k) continue;
                s += in.a[r] * in.a[t] + in.c[r] * in.c[t];
            }
            return s;
        };
        CHECK(b[0] == conv(0));
        for (int j = 1; j <= 2 * k - 1; ++j)
            CHECK(Rat(2L * j) * b[j - 1] + Rat(2L * j + 1) * b[j] == conv(j));
    }
}

TEST_CASE("quadratic form from squares") {
    CHECK(K_form({{Rat(1), Rat(1)}, {Rat(0), Rat(0)}}) == Rat(1));
    CHECK(K_form({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == Rat(0));
    CHECK(K_form({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}) == Rat(8, 3));
}

TEST_CASE("half-Hessian of the quadratic form is the Hankel matrix") {
    for (int k = 1; k <= 6; ++k) {
        auto unit = [&](int r) {
            SquaresInput in;
            in.a.assign(k + 1, Rat(0));
            in.c.assign(k + 1, Rat(0));
            if (r >= 0) in.a[r] = Rat(1);
            return in;
        };
        auto pair_unit = [&](int r, int s) {
            SquaresInput in;
            in.a.assign(k + 1, Rat(0));
            in.c.assign(k + 1, Rat(0));
            in.a[r] += Rat(1);
            in.a[s] += Rat(1);
            return in;
        };
        Rat k0 = K_form(unit(-1));
        HankelMatrix H = hankel(k, k);
        for (int r = 0; r <= k; ++r) {
            for (int s = 0; s <= k; ++s) {
                // exact finite difference of a quadratic form
                Rat entry = (K_form(pair_unit(r, s)) - K_form(unit(r)) - K_form(unit(s)) + k0) / Rat(2);
                CHECK(entry == H.entries[r][s]);
            }
        }
    }
}

TEST_CASE("positive definiteness on random nonzero inputs") {
    std::uniform_int_distribution<int> kk(1, 5);
    for (int i = 0; i < 200; ++i) {
        int k = kk(rng());
        SquaresInput in;
        in.a.resize(k + 1);
        in.c.resize(k + 1);
        bool nz = false;
        for (auto& x : in.a) {
            x = random_rat(-5, 5, 2);
            nz = nz || !x.is_zero();
        }
        for (auto& x : in.c) {
            x = random_rat(-5, 5, 2);
            nz = nz || !x.is_zero();
        }
        if (!nz) in.a[0] = Rat(1);
        CHECK(K_form(in) > Rat(0));
    }
}
