#pragma once

#include <random>
#include <vector>

#include "rjc/bpoly.hpp"
#include "rjc/parse.hpp"

namespace rjc::testing {

/// Deterministic rng for property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    return gen;
}

inline Rat random_rat(long lo = -9, long hi = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng()), den(rng()));
}

inline UPoly random_upoly(int max_deg, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    int d = dd(rng());
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = random_rat(lo, hi);
    return UPoly(std::move(c));
}

inline UPoly random_nonzero_upoly(int max_deg) {
    UPoly u = random_upoly(max_deg);
    while (u.is_zero()) u = random_upoly(max_deg);
    return u;
}

inline BPoly random_bpoly(int max_deg, double density = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    BPoly p;
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j)
            if (coin(rng()) < density) p = p + BPoly::monomial(random_rat(), i, j);
    return p;
}

inline BPoly bp(const std::string& text) { return parse_poly(text); }

}  // namespace rjc::testing
