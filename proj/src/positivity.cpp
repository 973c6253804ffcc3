#include "rjc/positivity.hpp"

#include "rjc/detail/bareiss.hpp"

namespace rjc {

Rat alpha(int i, int k) {
    if (i < -1 || k < 1) throw DenominatorZero("alpha: indices out of range");
    Rat r(1);
    for (int l = 0; l <= i; ++l) {
        long num = 2L * k - l;
        long den = 4L * k - (2L * l + 1);
        if (den == 0) throw DenominatorZero("alpha: zero denominator in product");
        r *= Rat(num, den);
    }
    return Rat(-2).pow(i + 1) * r;
}

HankelMatrix hankel(int j, int k) {
    if (j < 1 || k < j) throw BadIndices();
    HankelMatrix H;
    H.j = j;
    H.k = k;
    H.entries.assign(j + 1, std::vector<Rat>(j + 1));
    for (int r = 1; r <= j + 1; ++r)
        for (int s = 1; s <= j + 1; ++s) H.entries[r - 1][s - 1] = alpha(2 * j - r - s + 1, k);
    return H;
}

Rat det_exact(const std::vector<std::vector<Rat>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw NotSquare();
    return detail::bareiss_det(m, [](const Rat& a, const Rat& b) { return a / b; });
}

std::vector<Rat> leading_minors(const std::vector<std::vector<Rat>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw NotSquare();
    std::vector<Rat> out;
    for (size_t t = 1; t <= m.size(); ++t) {
        std::vector<std::vector<Rat>> sub(t, std::vector<Rat>(t));
        for (size_t i = 0; i < t; ++i)
            for (size_t j = 0; j < t; ++j) sub[i][j] = m[i][j];
        out.push_back(det_exact(sub));
    }
    return out;
}

UPoly l_poly(const std::vector<Rat>& b) {
    UPoly L;
    for (int j = 0; j < static_cast<int>(b.size()); ++j) {
        if (b[j].is_zero()) continue;
        // b_j (2(j+1) t + 2j + 1) t^j
        UPoly term = UPoly::monomial(Rat(2L * (j + 1)), j + 1) + UPoly::monomial(Rat(2L * j + 1), j);
        L = L + b[j] * term;
    }
    return L;
}

BrunaWitnesses bruna_witnesses(const std::vector<Rat>& b) {
    UPoly L = l_poly(b);
    if (L.is_zero()) return {true, std::nullopt, std::nullopt};
    SignCertificate neg = sign_certificate(L);
    SignCertificate pos = sign_certificate(-L);
    if (neg.tag != SignCertificate::Tag::NegativeWitness ||
        pos.tag != SignCertificate::Tag::NegativeWitness)
        throw LemmaViolation("nonzero L(theta) admits no sign change");
    return {false, neg.witness, pos.witness};
}

std::vector<Rat> b_from_squares(const SquaresInput& input) {
    if (input.a.size() != input.c.size() || input.a.size() < 2)
        throw BadLength("a and c must both have length k+1 with k >= 1");
    int k = static_cast<int>(input.a.size()) - 1;
    auto conv = [&](int d) {
        Rat s(0);
        for (int r = 0; r <= d; ++r) {
            int t = d - r;
            if (r > k || t > k) continue;
            s += input.a[r] * input.a[t] + input.c[r] * input.c[t];
        }
        return s;
    };
    std::vector<Rat> b(2 * k);
    for (int j = 0; j < 2 * k; ++j) {
        Rat acc(0);
        Rat prod(1);
        Rat pw(1);
        for (int l = 0; l <= j; ++l) {
            // prod_{i=0..l} (j - (i-1)) / (2(j-i) + 1), built incrementally
            prod *= Rat(static_cast<long>(j - (l - 1)), 2L * (j - l) + 1);
            acc += pw * prod * conv(j - l);
            pw *= Rat(-2);
        }
        b[j] = acc / Rat(j + 1);
    }
    return b;
}

Rat K_form(const SquaresInput& input) {
    int k = static_cast<int>(input.a.size()) - 1;
    if (k < 1) throw BadLength("need k >= 1");
    std::vector<Rat> b = b_from_squares(input);
    return Rat(-4L * k) * b[2 * k - 1] + input.a[k] * input.a[k] + input.c[k] * input.c[k];
}

}  // namespace rjc
