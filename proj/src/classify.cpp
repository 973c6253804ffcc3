#include "rjc/classify.hpp"

#include <algorithm>

#include "rjc/hrc.hpp"

namespace rjc {

const char* quartic_label_name(QuarticLabel l) {
    switch (l) {
        case QuarticLabel::I: return "I";
        case QuarticLabel::II: return "II";
        case QuarticLabel::III: return "III";
        case QuarticLabel::IV: return "IV";
        case QuarticLabel::V: return "V";
        case QuarticLabel::VI: return "VI";
        case QuarticLabel::VII: return "VII";
        case QuarticLabel::VIII: return "VIII";
        case QuarticLabel::IX: return "IX";
    }
    return "?";
}

Family Family::make(int id, const Rat& a02) {
    if (id < 1 || id > 4) throw PreconditionFailed("family id must be 1..4");
    Family f{id, a02};
    if (id == 2 && !(a02 == Rat(0) || a02 == Rat(1)))
        throw PreconditionFailed("family 2 requires a02 in {0, 1}");
    if (id == 4 && !(a02 * a02 < Rat(3)))
        throw PreconditionFailed("family 4 requires a02^2 < 3");
    return f;
}

BPoly family_poly(const Family& f) {
    BPoly y = BPoly::variable(Var::y);
    BPoly x = BPoly::variable(Var::x);
    switch (f.id) {
        case 1: return y + x * y.pow(2) + y.pow(4);
        case 2: return y + f.a02 * y.pow(2) + x * y.pow(3);
        case 3: return y + x.pow(2) * y.pow(2);
        case 4: return y + f.a02 * y.pow(2) + y.pow(3) + x.pow(2) * y.pow(2);
    }
    throw PreconditionFailed("family id must be 1..4");
}

QuarticCase quartic_case(const BPoly& p) {
    if (p.total_degree().value_or(-1) != 4) throw DegreeNotFour();
    BPoly q4 = p.homogeneous_part(4);
    if (q4.is_zero()) throw QuarticPartZero();

    // dehomogenize at y = 1; the missing degree is the root at infinity
    UPoly u = q4.eval_partial(Var::y, Rat(1));
    int inf_mult = u.is_zero() ? 4 : 4 - u.deg();

    std::vector<std::pair<int, bool>> pattern;
    if (inf_mult > 0) pattern.emplace_back(inf_mult, true);
    if (!u.is_zero() && u.deg() >= 1) {
        for (const auto& [part, mult] : squarefree_decomposition(u).parts) {
            int nreal = count_real_roots(part);
            int npairs = (part.deg() - nreal) / 2;
            for (int i = 0; i < nreal; ++i) pattern.emplace_back(mult, true);
            for (int i = 0; i < 2 * npairs; ++i) pattern.emplace_back(mult, false);
        }
    }
    std::sort(pattern.begin(), pattern.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second && !b.second;
    });

    std::vector<int> mults;
    int nreal = 0;
    for (const auto& [m, real] : pattern) {
        mults.push_back(m);
        if (real) ++nreal;
    }

    QuarticCase out;
    out.root_pattern = pattern;
    if (mults == std::vector<int>{1, 1, 1, 1}) {
        out.label = nreal == 4 ? QuarticLabel::I : nreal == 2 ? QuarticLabel::III : QuarticLabel::II;
    } else if (mults == std::vector<int>{2, 1, 1}) {
        out.label = nreal == 3 ? QuarticLabel::V : QuarticLabel::IV;
    } else if (mults == std::vector<int>{2, 2}) {
        out.label = nreal == 2 ? QuarticLabel::VII : QuarticLabel::VI;
    } else if (mults == std::vector<int>{3, 1}) {
        out.label = QuarticLabel::VIII;
    } else {
        out.label = QuarticLabel::IX;
    }
    return out;
}

// ---------------------------------------------------------------------------
// canonical family matching

namespace {

std::optional<Rat> rational_cube_root(const Rat& v) {
    if (v.is_zero()) return Rat(0);
    Int n = v.num(), d = v.den();
    Int rn, rd;
    bool sign = n < 0;
    Int an = sign ? Int(-n) : n;
    if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), 3) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) == 0) return std::nullopt;
    return Rat(sign ? Int(-rn) : rn, rd);
}

std::optional<Rat> rational_sqrt(const Rat& v) {
    if (v.sign() < 0) return std::nullopt;
    if (v.is_zero()) return Rat(0);
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), v.num().get_mpz_t(), 2) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), v.den().get_mpz_t(), 2) == 0) return std::nullopt;
    return Rat(rn, rd);
}

bool support_within(const BPoly& q, std::initializer_list<std::pair<int, int>> allowed) {
    for (const auto& [ij, c] : q.terms()) {
        bool ok = false;
        for (const auto& a : allowed)
            if (ij.first == a.first && ij.second == a.second) ok = true;
        if (!ok) return false;
    }
    return true;
}

// q is normalized: q(x, 0) identically zero. Matches against one family
// template, solving for the rational scalings.
std::optional<Family> match_template(const BPoly& q) {
    Rat c01 = q.coeff(0, 1);
    if (c01.is_zero()) return std::nullopt;

    // family 1: y + x y^2 + y^4 under v -> (s, lambda x + e, mu y)
    if (support_within(q, {{0, 1}, {1, 2}, {0, 2}, {0, 4}})) {
        Rat c12 = q.coeff(1, 2), c04 = q.coeff(0, 4);
        if (!c12.is_zero() && !c04.is_zero() && rational_cube_root(c04 / c01)) {
            return Family::make(1);
        }
    }
    // family 2: y + a02 y^2 + x y^3
    if (support_within(q, {{0, 1}, {0, 2}, {0, 3}, {1, 3}})) {
        Rat c13 = q.coeff(1, 3);
        if (!c13.is_zero()) {
            Rat a02 = q.coeff(0, 2).is_zero() ? Rat(0) : Rat(1);
            return Family::make(2, a02);
        }
    }
    // family 3: y + x^2 y^2 (x-translation folds into the xy^2, y^2 slots)
    if (support_within(q, {{0, 1}, {0, 2}, {1, 2}, {2, 2}})) {
        Rat c22 = q.coeff(2, 2), c12 = q.coeff(1, 2), c02 = q.coeff(0, 2);
        if (!c22.is_zero() && c12 * c12 == Rat(4) * c22 * c02) {
            return Family::make(3);
        }
    }
    // family 4: y + a02 y^2 + y^3 + x^2 y^2
    if (support_within(q, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 2}})) {
        Rat c03 = q.coeff(0, 3), c22 = q.coeff(2, 2);
        if (!c03.is_zero() && !c22.is_zero()) {
            if (auto mu0 = rational_sqrt(c03 / c01)) {
                for (const Rat& mu : {*mu0, -*mu0}) {
                    if (mu.is_zero()) continue;
                    Rat v = c01 * mu;  // s^-1 mu^2
                    auto lam = rational_sqrt(c22 / v);
                    if (!lam || lam->is_zero()) continue;
                    Rat e = q.coeff(1, 2) / (Rat(2) * v * *lam);
                    Rat a02 = q.coeff(0, 2) / v - e * e;
                    if (a02 * a02 < Rat(3)) return Family::make(4, a02);
                }
            }
        }
    }
    return std::nullopt;
}

// Rational y0 with q(x, y0) constant in x: common rational roots of the
// positive-x-degree coefficients.
std::vector<Rat> axis_candidates(const BPoly& q) {
    std::vector<Rat> out = {Rat(0)};
    auto cs = q.coeffs_in(Var::x);
    UPoly g;
    for (size_t i = 1; i < cs.size(); ++i) g = UPoly::gcd(g, cs[i]);
    if (!g.is_zero() && !g.is_constant()) {
        for (const auto& iv : isolate_roots(g)) {
            if (auto r = rational_root_in(g, iv)) {
                if (!r->is_zero()) out.push_back(*r);
            }
        }
    }
    return out;
}

}  // namespace

std::optional<Family> canonical_family_match(const BPoly& p) {
    if (p.total_degree().value_or(0) != 4) return std::nullopt;
    for (bool swapped : {false, true}) {
        BPoly q0 = swapped ? p.swap_vars() : p;
        for (const Rat& y0 : axis_candidates(q0)) {
            BPoly q = affine_substitute(q0, AffineMap::translation(Rat(0), y0));
            q = q - BPoly(q.coeff(0, 0));
            auto c0 = q.coeffs_in(Var::y);
            if (!c0.empty() && !c0[0].is_zero()) continue;  // x-axis not in the zero level
            if (auto fam = match_template(q)) return fam;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// classification pipeline

namespace {

Verdict univariate_verdict(const BPoly& p, Var live) {
    UPoly u = p.as_upoly(live);
    UPoly du = u.derivative();
    Verdict v;
    if (du.is_zero() || (!du.is_constant() && count_real_roots(du) > 0)) {
        auto roots = du.is_zero() ? std::vector<IsolatingInterval>{{Rat(0), Rat(1), 1}}
                                  : isolate_roots(du);
        v.tag = Verdict::Tag::NotSubmersion;
        const auto& iv = roots.front();
        if (live == Var::x)
            v.witness = WitnessBox{iv.lo, iv.hi, Rat(0), Rat(1), "univariate derivative zero"};
        else
            v.witness = WitnessBox{Rat(0), Rat(1), iv.lo, iv.hi, "univariate derivative zero"};
        return v;
    }
    v.tag = Verdict::Tag::SubmersionAllConnected;
    v.rule = ConnRule::Univariate;
    v.note = "depends on one variable; the derivative never vanishes";
    return v;
}

}  // namespace

Verdict classify_degree4(const BPoly& p) {
    if (p.is_constant()) throw ConstantInput();
    int dx = p.degree_in(Var::x).value_or(0);
    int dy = p.degree_in(Var::y).value_or(0);
    if (dy == 0) return univariate_verdict(p, Var::x);
    if (dx == 0) return univariate_verdict(p, Var::y);

    Verdict v;
    if (auto w = critical_point_exists(p)) {
        v.tag = Verdict::Tag::NotSubmersion;
        v.witness = *w;
        return v;
    }
    int d = *p.total_degree();
    ConnectednessCertificate cert = decide_connected(p, Rat(0));
    if (cert.tag == ConnectednessCertificate::Tag::ConnectedAllLevels) {
        v.tag = Verdict::Tag::SubmersionAllConnected;
        v.rule = cert.rule;
        return v;
    }
    if (d <= 2) {
        // a degree <= 2 submersion always satisfies one of the rules above
        v.tag = Verdict::Tag::SubmersionAllConnected;
        v.rule = cert.rule;
        v.note = "low degree";
        return v;
    }
    if (d == 4) {
        if (auto fam = canonical_family_match(p)) {
            v.tag = Verdict::Tag::SubmersionDisconnected;
            v.family = *fam;
            v.hrc_description = hrc_region(*fam).description;
            return v;
        }
    }
    v.tag = Verdict::Tag::Undetermined;
    if (d == 4) v.case_label = quartic_case(p).label;
    v.note = cert.tag == ConnectednessCertificate::Tag::ConnectedZeroLevel
                 ? "zero level connected; other levels undecided"
                 : "no connectedness rule applies and no canonical form matched";
    return v;
}

// ---------------------------------------------------------------------------
// disconnection certificates

namespace {

// p restricted to the segment from the origin to (bx, by), as a polynomial
// in the segment parameter.
UPoly segment_restriction(const BPoly& p, const Rat& bx, const Rat& by) {
    UPoly t = UPoly::variable();
    std::vector<UPoly> xpow{UPoly(Rat(1))}, ypow{UPoly(Rat(1))};
    int dx = p.degree_in(Var::x).value_or(0), dy = p.degree_in(Var::y).value_or(0);
    for (int i = 1; i <= dx; ++i) xpow.push_back(xpow.back() * (bx * t));
    for (int j = 1; j <= dy; ++j) ypow.push_back(ypow.back() * (by * t));
    UPoly r;
    for (const auto& [ij, c] : p.terms()) r = r + c * (xpow[ij.first] * ypow[ij.second]);
    return r;
}

// exact count of zeros of p on the open segment, endpoints excluded
int open_segment_zeros(const BPoly& p, const Rat& bx, const Rat& by) {
    UPoly u = segment_restriction(p, bx, by);
    if (u.is_zero()) return -1;  // vanishes identically
    UPoly t = UPoly::variable();
    UPoly t1 = t - UPoly(Rat(1));
    while (u.eval(Rat(0)).is_zero()) u = UPoly::exact_div(u, t);
    while (u.eval(Rat(1)).is_zero()) u = UPoly::exact_div(u, t1);
    if (u.is_constant()) return 0;
    return count_real_roots(u, std::make_pair(Rat(0), Rat(1)));
}

std::pair<Rat, Rat> family_point_b(const Family& f) {
    switch (f.id) {
        case 1: return {Rat(-2), Rat(1)};
        case 2: return {-(Rat(1) + f.a02), Rat(1)};
        case 3: return {Rat(2), Rat(-1, 4)};
        case 4: {
            // rational point on 1 + a02 y + y^2 + x^2 y = 0 with y < 0:
            // search y = -m/n of small height with (1 - a02 t + t^2)/t square
            for (long n = 1; n <= 40; ++n) {
                for (long m = 1; m <= 40; ++m) {
                    Rat t(m, n);
                    Rat w = (Rat(1) - f.a02 * t + t * t) / t;
                    if (auto s = rational_sqrt(w)) {
                        if (!s->is_zero()) return {*s, -t};
                    }
                }
            }
            throw Unsupported(
                "family 4 with a02 = " + f.a02.to_string() +
                ": no rational point found on the non-axis component of the zero level");
        }
    }
    throw PreconditionFailed("family id must be 1..4");
}

}  // namespace

DisconnectionCertificate disconnection_certificate(const Family& f) {
    BPoly p = family_poly(f);
    DisconnectionCertificate cert;
    cert.point_a = {Rat(0), Rat(0)};
    cert.point_b = family_point_b(f);
    const auto& [bx, by] = cert.point_b;
    if (!p.eval(bx, by).is_zero())
        throw Error("disconnection_certificate: point is not on the zero level");
    int zeros = open_segment_zeros(p, bx, by);
    if (zeros != 0)
        throw Error("disconnection_certificate: separator segment is not zero-free");
    cert.separator = "open segment from (0, 0) to (" + bx.to_string() + ", " + by.to_string() +
                     "); the polynomial has verified constant nonzero sign on it";
    return cert;
}

bool verify_disconnection_certificate(const Family& f, const DisconnectionCertificate& cert) {
    BPoly p = family_poly(f);
    if (!p.eval(cert.point_a.first, cert.point_a.second).is_zero()) return false;
    if (!p.eval(cert.point_b.first, cert.point_b.second).is_zero()) return false;
    if (cert.point_a == cert.point_b) return false;
    BPoly shifted = affine_substitute(
        p, AffineMap::translation(cert.point_a.first, cert.point_a.second));
    return open_segment_zeros(shifted, cert.point_b.first - cert.point_a.first,
                              cert.point_b.second - cert.point_a.second) == 0;
}

}  // namespace rjc
