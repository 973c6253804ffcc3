#include "rjc/subres.hpp"

#include <algorithm>

#include "rjc/detail/bareiss.hpp"

namespace rjc {

UPoly upoly_det(std::vector<std::vector<UPoly>> m) {
    return detail::bareiss_det(std::move(m),
                               [](const UPoly& a, const UPoly& b) { return UPoly::exact_div(a, b); });
}

SylvesterMatrix sylvester_from_coeffs(const std::vector<UPoly>& cp, const std::vector<UPoly>& cq) {
    if (cp.empty() || cq.empty()) throw ZeroPolynomial();
    int n = static_cast<int>(cp.size()) - 1;
    int m = static_cast<int>(cq.size()) - 1;
    if (n == 0 && m == 0) throw BothConstantInVar();
    SylvesterMatrix S;
    S.n = n;
    S.m = m;
    int sz = n + m;
    S.entries.assign(sz, std::vector<UPoly>(sz, UPoly()));
    // m rows of p's coefficients, highest first, sliding right
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S.entries[r][r + n - k] = cp[k];
    // n rows of q's coefficients; bottom row starts at column 0
    for (int t = 0; t < n; ++t)
        for (int k = 0; k <= m; ++k) S.entries[m + t][(n - 1 - t) + m - k] = cq[k];
    return S;
}

SylvesterMatrix sylvester(const BPoly& p, const BPoly& q, Var var) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial();
    return sylvester_from_coeffs(p.coeffs_in(var), q.coeffs_in(var));
}

namespace {

UPoly trimmed_det(const SylvesterMatrix& S, int k) {
    int sz = S.n + S.m;
    if (k < 0 || 2 * k > sz) throw KOutOfRange();
    int t = sz - 2 * k;
    std::vector<std::vector<UPoly>> sub(t, std::vector<UPoly>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) sub[i][j] = S.entries[i + k][j + k];
    return upoly_det(std::move(sub));
}

}  // namespace

UPoly subresultant(const BPoly& p, const BPoly& q, Var var, int k) {
    return trimmed_det(sylvester(p, q, var), k);
}

UPoly subresultant_from_coeffs(const std::vector<UPoly>& cp, const std::vector<UPoly>& cq, int k) {
    return trimmed_det(sylvester_from_coeffs(cp, cq), k);
}

std::pair<UPoly, UPoly> r0_r1_quad_pair(const UPoly& a, const UPoly& b, const UPoly& c,
                                        const UPoly& d) {
    UPoly r1 = c - a;
    UPoly db = d - b;
    UPoly r0 = -(db * db) + (a * db - b * r1) * r1;
    return {r0, r1};
}

std::pair<UPoly, UPoly> r0_r1_quad_cubic(const UPoly& a, const UPoly& b, const UPoly& c,
                                         const UPoly& d, const UPoly& e) {
    UPoly r1 = a * a - a * c - b + d;
    UPoly f = a * b - b * c + e;
    UPoly r0 = -(f * f) + (a * f - b * r1) * r1;
    return {r0, r1};
}

int common_root_count(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroLeadingCoefficient();
    BPoly bp = BPoly::from_upoly(p, Var::x);
    BPoly bq = BPoly::from_upoly(q, Var::x);
    int n = p.deg(), m = q.deg();
    if (n == 0 || m == 0) return 0;
    int kmax = (n + m) / 2;
    for (int k = 0; k <= kmax; ++k) {
        UPoly rk = subresultant(bp, bq, Var::x, k);
        if (!rk.is_zero()) return k;
    }
    throw Error("common_root_count: no nonzero subresultant (unreachable)");
}

std::vector<BPoly> subresultant_polys(const BPoly& f, const BPoly& g, Var var) {
    auto cf = f.coeffs_in(var);
    auto cg = g.coeffs_in(var);
    if (cf.empty() || cg.empty()) throw ZeroPolynomial();
    int n = static_cast<int>(cf.size()) - 1;
    int m = static_cast<int>(cg.size()) - 1;
    if (n < m) return subresultant_polys(g, f, var);
    if (m == 0) throw BothConstantInVar();
    Var ov = other(var);

    // rows: v^{m-k-1} f, ..., f, v^{n-k-1} g, ..., g as coefficient vectors
    // of length n+m-k (degree n+m-k-1 downward); determinant-polynomial form.
    std::vector<BPoly> out;
    for (int k = 0; k < m; ++k) {
        int rows = n + m - 2 * k;
        int cols = n + m - k;
        std::vector<std::vector<UPoly>> M(rows, std::vector<UPoly>(cols));
        for (int r = 0; r < m - k; ++r) {
            // v^{m-k-1-r} f: coefficient of v^(cols-1-c) at column c
            for (int i = 0; i <= n; ++i) {
                int pw = m - k - 1 - r + i;  // power of v
                M[r][cols - 1 - pw] = cf[i];
            }
        }
        for (int r = 0; r < n - k; ++r) {
            for (int i = 0; i <= m; ++i) {
                int pw = n - k - 1 - r + i;
                M[m - k + r][cols - 1 - pw] = cg[i];
            }
        }
        BPoly sk;
        for (int l = 0; l <= k; ++l) {
            std::vector<std::vector<UPoly>> A(rows, std::vector<UPoly>(rows));
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c + 1 < rows; ++c) A[r][c] = M[r][c];
                A[r][rows - 1] = M[r][cols - 1 - l];
            }
            UPoly dl = upoly_det(std::move(A));
            sk = sk + BPoly::from_upoly(dl, ov) * BPoly::variable(var).pow(l);
        }
        out.push_back(sk);
    }
    out.push_back(g);  // S_m: gcd candidate of full degree m
    return out;
}

}  // namespace rjc
