#include "rjc/zeros.hpp"

#include <algorithm>
#include <cassert>

namespace rjc {

// ---------------------------------------------------------------------------
// shapes

BPoly QuadShape::to_bpoly(Var v) const {
    return BPoly::from_coeffs({cst, lin, lead}, v);
}

QuadShape QuadShape::from(const BPoly& p, Var v) {
    if (p.degree_in(v).value_or(0) > 2) throw DegreeTooHigh("quadratic shape expects degree <= 2");
    auto c = p.coeffs_in(v);
    c.resize(3);
    return {c[2], c[1], c[0]};
}

BPoly CubicShape::to_bpoly(Var v) const {
    return BPoly::from_coeffs({cst, lin, quad, lead}, v);
}

CubicShape CubicShape::from(const BPoly& p, Var v) {
    if (p.degree_in(v).value_or(0) > 3) throw DegreeTooHigh("cubic shape expects degree <= 3");
    auto c = p.coeffs_in(v);
    c.resize(4);
    return {c[3], c[2], c[1], c[0]};
}

// ---------------------------------------------------------------------------
// decision procedures

namespace {

struct PairData {
    UPoly r0, r1;
};

PairData shaped_subresultants(const QuadShape& p, const CubicShape& q) {
    std::vector<UPoly> cp = {p.cst, p.lin, p.lead};
    std::vector<UPoly> cq = {q.cst, q.lin, q.quad, q.lead};
    return {subresultant_from_coeffs(cp, cq, 0), subresultant_from_coeffs(cp, cq, 1)};
}

PairData shaped_subresultants(const QuadShape& p, const QuadShape& q) {
    std::vector<UPoly> cp = {p.cst, p.lin, p.lead};
    std::vector<UPoly> cq = {q.cst, q.lin, q.lead};
    return {subresultant_from_coeffs(cp, cq, 0), subresultant_from_coeffs(cp, cq, 1)};
}

// "R0 shares no zero with u" over the complex numbers. A zero u never
// vanishes is fine only if R0 has no zeros at all.
bool no_common_zero(const UPoly& r0, const UPoly& u) {
    if (u.is_zero()) return r0.deg() == 0;
    if (u.deg() == 0) return true;
    return UPoly::gcd(r0, u).is_constant();
}

struct LocatorShapes {
    const UPoly& lead_p;  // quadratic's leading coefficient
    const UPoly& lin_p;
    const UPoly& cst_p;
    const UPoly& lead_q;
    bool q_cubic;
    UPoly q_disc;  // lin_q^2 - 4 lead_q cst_q (quad q only)
};

// Finds a real root alpha of r0 where the two specializations provably share
// a real root, by exact sign analysis at alpha. Succeeds whenever the
// sufficient criteria below have fired.
std::optional<IsolatingInterval> locate_common_real_zero(const UPoly& r0, const UPoly& r1,
                                                         const LocatorShapes& s) {
    UPoly disc_p = s.lin_p * s.lin_p - Rat(4) * (s.lead_p * s.cst_p);
    for (const auto& iv : isolate_roots(r0)) {
        if (sign_at_root(s.lead_q, r0, iv) == 0) continue;
        if (sign_at_root(s.lead_p, r0, iv) != 0) {
            if (sign_at_root(r1, r0, iv) != 0) return iv;  // single shared root, necessarily real
            if (sign_at_root(disc_p, r0, iv) >= 0) return iv;  // both shared roots real
        } else {
            if (sign_at_root(s.lin_p, r0, iv) != 0) return iv;  // linear specialization
            // lead and lin vanish, so the constant term does too and
            // p(alpha, .) is identically zero.
            if (s.q_cubic) return iv;  // odd degree always has a real root
            if (sign_at_root(s.q_disc, r0, iv) >= 0) return iv;
        }
    }
    return std::nullopt;
}

ZeroVerdict hypotheses_not_met(std::string note) {
    return {ZeroVerdict::Tag::HypothesesNotMet, std::nullopt, std::nullopt, std::move(note)};
}

ZeroVerdict found(IsolatingInterval iv, std::string note) {
    return {ZeroVerdict::Tag::CommonRealZeroExists, iv, std::nullopt, std::move(note)};
}

}  // namespace

ZeroVerdict common_zero_quad_cubic(const QuadCubicPair& pair) {
    auto [r0, r1] = shaped_subresultants(pair.p, pair.q);
    if (r0.is_zero()) return hypotheses_not_met("R0 is identically zero");
    if (!no_common_zero(r0, pair.q.lead)) return hypotheses_not_met("R0 shares a zero with the cubic leading coefficient");
    SignCertificate cert = sign_certificate(r0.lc() * r0);
    if (cert.tag != SignCertificate::Tag::NegativeWitness)
        return hypotheses_not_met("lc(R0) * R0 is nonnegative everywhere");
    LocatorShapes shapes{pair.p.lead, pair.p.lin, pair.p.cst, pair.q.lead, true, UPoly()};
    auto iv = locate_common_real_zero(r0, r1, shapes);
    if (!iv) throw Error("common_zero_quad_cubic: criterion fired but no witness located");
    return found(*iv, "lc(R0)*R0 < 0 at " + cert.witness->to_string());
}

ZeroVerdict common_zero_quad_quad(const QuadQuadPair& pair) {
    auto [r0, r1] = shaped_subresultants(pair.p, pair.q);
    if (r0.is_zero()) return hypotheses_not_met("R0 is identically zero");
    if (!no_common_zero(r0, pair.p.lead) || !no_common_zero(r0, pair.q.lead))
        return hypotheses_not_met("R0 shares a zero with a leading coefficient");
    SignCertificate cert = sign_certificate(r0.lc() * r0);
    if (cert.tag != SignCertificate::Tag::NegativeWitness)
        return hypotheses_not_met("lc(R0) * R0 is nonnegative everywhere");
    UPoly qdisc = pair.q.lin * pair.q.lin - Rat(4) * (pair.q.lead * pair.q.cst);
    LocatorShapes shapes{pair.p.lead, pair.p.lin, pair.p.cst, pair.q.lead, false, qdisc};
    auto iv = locate_common_real_zero(r0, r1, shapes);
    if (!iv) throw Error("common_zero_quad_quad: criterion fired but no witness located");
    return found(*iv, "lc(R0)*R0 < 0 at " + cert.witness->to_string());
}

ZeroVerdict common_zero_quad_quad_at(const QuadQuadPair& pair, const Rat& alpha) {
    auto [r0, r1] = shaped_subresultants(pair.p, pair.q);
    if (r0.is_zero() || !r0.eval(alpha).is_zero() || !pair.p.lead.eval(alpha).is_zero())
        throw AlphaNotCommonZero();
    if (!no_common_zero(r0, pair.q.lead))
        return hypotheses_not_met("R0 shares a zero with the second leading coefficient");
    ZeroVerdict v;
    v.witness_x_rational = alpha;
    if (!pair.p.lin.eval(alpha).is_zero()) {
        v.tag = ZeroVerdict::Tag::CommonRealZeroExists;
        v.note = "first polynomial is linear on the line and shares its root";
        return v;
    }
    // lead and lin of p vanish at alpha, hence so does the constant term.
    if (!pair.p.cst.eval(alpha).is_zero()) {
        v.tag = ZeroVerdict::Tag::NoCommonRealZeroOnLine;
        v.note = "first polynomial is a nonzero constant on the line";
        return v;
    }
    Rat qd = pair.q.lin.eval(alpha) * pair.q.lin.eval(alpha) -
             Rat(4) * pair.q.lead.eval(alpha) * pair.q.cst.eval(alpha);
    if (qd >= Rat(0)) {
        v.tag = ZeroVerdict::Tag::CommonRealZeroExists;
        v.note = "first polynomial vanishes on the line; second has a real root there";
    } else {
        v.tag = ZeroVerdict::Tag::NoCommonRealZeroOnLine;
        v.note = "first polynomial vanishes on the line; second has negative discriminant";
    }
    return v;
}

namespace {

// Some z with R1(z) = 0 satisfying the given sign conditions; when R1 is
// identically zero any z qualifies, so search for a point satisfying the
// side conditions directly.
bool r1_root_with_signs(const UPoly& r0, const UPoly& r1, const UPoly& want_pos,
                        const UPoly& want_nonzero) {
    if (r1.is_zero()) {
        SignCertificate c = sign_certificate(-want_pos);
        if (c.tag != SignCertificate::Tag::NegativeWitness) return false;
        const Rat z = *c.witness;
        Rat step(1);
        for (int tries = 0; tries < 64; ++tries, step /= Rat(2)) {
            Rat cand = z + step;  // approaches z, where want_pos is strictly positive
            if (want_pos.eval(cand).sign() > 0 && !want_nonzero.eval(cand).is_zero()) return true;
        }
        return want_pos.eval(z).sign() > 0 && !want_nonzero.eval(z).is_zero();
    }
    for (const auto& iv : isolate_roots(r1)) {
        if (sign_at_root(want_pos, r1, iv) > 0 && sign_at_root(want_nonzero, r1, iv) != 0)
            return true;
    }
    return false;
}

}  // namespace

ZeroVerdict common_zero_quad_cubic_r1(const QuadCubicPair& pair) {
    auto [r0, r1] = shaped_subresultants(pair.p, pair.q);
    if (r0.is_zero()) return hypotheses_not_met("R0 is identically zero");
    if (!no_common_zero(r0, pair.q.lead))
        return hypotheses_not_met("R0 shares a zero with the cubic leading coefficient");
    UPoly scaled_lead = r0.lc() * pair.p.lead;  // want lc(R0) * lead_p(z) > 0
    if (!r1_root_with_signs(r0, r1, scaled_lead, pair.q.lead))
        return hypotheses_not_met("no root z of R1 with lc(R0)*lead_p(z) > 0 and lead_q(z) != 0");
    LocatorShapes shapes{pair.p.lead, pair.p.lin, pair.p.cst, pair.q.lead, true, UPoly()};
    auto iv = locate_common_real_zero(r0, r1, shapes);
    if (!iv) throw Error("common_zero_quad_cubic_r1: criterion fired but no witness located");
    return found(*iv, "R1 has a root with lc(R0)*lead_p > 0 there");
}

ZeroVerdict common_zero_quad_quad_r1(const QuadQuadPair& pair) {
    auto [r0, r1] = shaped_subresultants(pair.p, pair.q);
    if (r0.is_zero()) return hypotheses_not_met("R0 is identically zero");
    if (!no_common_zero(r0, pair.p.lead) || !no_common_zero(r0, pair.q.lead))
        return hypotheses_not_met("R0 shares a zero with a leading coefficient");
    if (r0.lc().sign() <= 0) return hypotheses_not_met("lc(R0) is not positive");
    UPoly both = pair.p.lead * pair.q.lead;
    if (!r1_root_with_signs(r0, r1, both * both, both))
        return hypotheses_not_met("no root z of R1 with lead_p(z)*lead_q(z) != 0");
    UPoly qdisc = pair.q.lin * pair.q.lin - Rat(4) * (pair.q.lead * pair.q.cst);
    LocatorShapes shapes{pair.p.lead, pair.p.lin, pair.p.cst, pair.q.lead, false, qdisc};
    auto iv = locate_common_real_zero(r0, r1, shapes);
    if (!iv) throw Error("common_zero_quad_quad_r1: criterion fired but no witness located");
    return found(*iv, "lc(R0) > 0 and R1 has a root where both leads are nonzero");
}

// ---------------------------------------------------------------------------
// bivariate gcd and exact division (main variable y, UPoly coefficients)

namespace {

using YPoly = std::vector<UPoly>;  // index = power of y

void ytrim(YPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

YPoly to_y(const BPoly& f) {
    YPoly v = f.coeffs_in(Var::y);
    ytrim(v);
    return v;
}

BPoly from_y(const YPoly& f) { return BPoly::from_coeffs(f, Var::y); }

UPoly ycontent(const YPoly& f) {
    UPoly g;
    for (const UPoly& c : f) g = UPoly::gcd(g, c);
    return g;  // monic
}

YPoly ydiv_scalar(const YPoly& f, const UPoly& s) {
    YPoly r;
    r.reserve(f.size());
    for (const UPoly& c : f) r.push_back(c.is_zero() ? UPoly() : UPoly::exact_div(c, s));
    return r;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
    YPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    ytrim(r);
    return r;
}

YPoly ymul_scalar(const YPoly& f, const UPoly& s) {
    YPoly r;
    r.reserve(f.size());
    for (const UPoly& c : f) r.push_back(c * s);
    ytrim(r);
    return r;
}

YPoly yshift(const YPoly& f, int k) {
    if (f.empty()) return f;
    YPoly r(f.size() + k);
    for (size_t i = 0; i < f.size(); ++i) r[i + k] = f[i];
    return r;
}

// pseudo-remainder of u by v in y
YPoly yprem(YPoly u, const YPoly& v) {
    int dv = static_cast<int>(v.size()) - 1;
    const UPoly& L = v.back();
    while (static_cast<int>(u.size()) - 1 >= dv && !u.empty()) {
        int du = static_cast<int>(u.size()) - 1;
        YPoly t = yshift(ymul_scalar(v, u.back()), du - dv);
        u = ysub(ymul_scalar(u, L), t);
        if (static_cast<int>(u.size()) - 1 == du)
            throw Error("yprem: degree did not drop");
    }
    return u;
}

YPoly yprimitive(const YPoly& f) {
    if (f.empty()) return f;
    UPoly c = ycontent(f);
    return ydiv_scalar(f, c);
}

}  // namespace

BPoly gcd_bivariate(const BPoly& f, const BPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    YPoly yf = to_y(f), yg = to_y(g);
    UPoly cf = ycontent(yf), cg = ycontent(yg);
    UPoly cc = UPoly::gcd(cf, cg);
    YPoly u = ydiv_scalar(yf, cf), v = ydiv_scalar(yg, cg);
    if (u.size() < v.size()) std::swap(u, v);
    while (true) {
        if (v.size() <= 1) {
            // primitive and constant in y: a unit
            return BPoly::from_upoly(cc, Var::x);
        }
        YPoly r = yprem(u, v);
        if (r.empty()) break;
        u = std::move(v);
        v = yprimitive(r);
    }
    YPoly pp = yprimitive(v);
    // normalize: make the leading y-coefficient monic
    Rat leadlc = pp.back().lc();
    for (UPoly& c : pp) c = c / leadlc;
    return from_y(pp) * BPoly::from_upoly(cc, Var::x);
}

BPoly exact_div_bivariate(const BPoly& f, const BPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (f.is_zero()) return BPoly();
    YPoly num = to_y(f), den = to_y(g);
    if (den.size() == 1) {
        YPoly q;
        q.reserve(num.size());
        for (const UPoly& c : num) q.push_back(c.is_zero() ? UPoly() : UPoly::exact_div(c, den[0]));
        return from_y(q);
    }
    int dd = static_cast<int>(den.size()) - 1;
    YPoly q(num.size());
    while (static_cast<int>(num.size()) - 1 >= dd && !num.empty()) {
        int dn = static_cast<int>(num.size()) - 1;
        UPoly qc = UPoly::exact_div(num.back(), den.back());
        q[dn - dd] = qc;
        num = ysub(num, yshift(ymul_scalar(den, qc), dn - dd));
    }
    if (!num.empty()) throw Error("exact_div_bivariate: not divisible");
    ytrim(q);
    return from_y(q);
}

// ---------------------------------------------------------------------------
// real zeros of systems

namespace {

// Refine iv (a root interval of base) until u is root-free and sign-constant
// on the closed interval. Requires u(alpha) != 0.
IsolatingInterval shrink_until_nonvanishing(const UPoly& u, const UPoly& base,
                                            IsolatingInterval iv) {
    UPoly sf = base.squarefree_part();
    SturmChain bc(sf);
    SturmChain uc(u);
    while (true) {
        if (!u.eval(iv.lo).is_zero() && !u.eval(iv.hi).is_zero() && uc.count(iv.lo, iv.hi) == 0)
            return iv;
        Rat m = iv.midpoint();
        while (sf.eval(m).is_zero()) m = (iv.lo + m) / Rat(2);
        if (bc.count(iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
}

// Crude root bound for a polynomial sum_k c_k(x) v^k at x in iv, where the
// leading coefficient does not vanish on iv.
Rat cross_root_bound(const std::vector<UPoly>& coeffs, const IsolatingInterval& iv) {
    Rat upper(0);
    for (size_t k = 0; k + 1 < coeffs.size(); ++k)
        upper += poly_abs_upper_bound(coeffs[k], iv.lo, iv.hi);
    Rat lower = poly_abs_lower_bound(coeffs.back(), iv.lo, iv.hi);
    return Rat(1) + upper / lower;
}

WitnessBox make_box(Var root_var, const IsolatingInterval& root_iv, const Rat& blo, const Rat& bhi,
                    std::string how) {
    if (root_var == Var::x) return {root_iv.lo, root_iv.hi, blo, bhi, std::move(how)};
    return {blo, bhi, root_iv.lo, root_iv.hi, std::move(how)};
}

// Common real zeros of u(rv) = 0 (univariate in rv) and g = 0.
std::optional<WitnessBox> pure_line_case(const UPoly& u, const BPoly& g, Var rv) {
    auto gy = g.coeffs_in(other(rv));  // coefficients are UPoly in rv
    int dg = static_cast<int>(gy.size()) - 1;
    if (dg <= 0) return std::nullopt;  // coprime univariate pair shares no root
    for (const auto& iv : isolate_roots(u)) {
        if (sign_at_root(gy[dg], u, iv) != 0) {
            bool real_root;
            if (dg % 2 == 1) {
                real_root = true;
            } else if (dg == 2) {
                UPoly disc = gy[1] * gy[1] - Rat(4) * (gy[2] * gy[0]);
                real_root = sign_at_root(disc, u, iv) >= 0;
            } else {
                throw Unsupported("even cross-degree >= 4 at an algebraic line");
            }
            if (!real_root) continue;
            IsolatingInterval tight = shrink_until_nonvanishing(gy[dg], u, iv);
            Rat bound = cross_root_bound(gy, tight);
            return make_box(rv, tight, -bound, bound, "root line with odd/quadratic cross fiber");
        }
        auto r = rational_root_in(u, iv);
        if (!r) throw Unsupported("leading coefficient vanishes at an irrational root");
        UPoly gu = g.eval_partial(rv, *r);
        if (gu.is_zero()) {
            // g vanishes on the whole line
            return make_box(rv, {*r - Rat(1, 2), *r + Rat(1, 2), 1}, Rat(-1), Rat(1),
                            "common line of zeros");
        }
        if (!gu.is_constant() && count_real_roots(gu) > 0) {
            auto yiv = isolate_roots(gu).front();
            if (rv == Var::x) return WitnessBox{*r, *r, yiv.lo, yiv.hi, "rational line"};
            return WitnessBox{yiv.lo, yiv.hi, *r, *r, "rational line"};
        }
    }
    return std::nullopt;
}

// Tight cross-variable interval for the root of S1 = u*v + w at x = alpha:
// beta = -w(alpha)/u(alpha), bracketed by interval evaluation with an exact
// derivative slack.
std::pair<Rat, Rat> linear_root_bracket(const UPoly& u, const UPoly& w, const UPoly& base,
                                        IsolatingInterval iv) {
    iv = shrink_until_nonvanishing(u, base, iv);
    Rat target(1, 1 << 20);
    UPoly sf = base.squarefree_part();
    SturmChain bc(sf);
    while (iv.width() > target) {
        Rat m = iv.midpoint();
        while (sf.eval(m).is_zero()) m = (iv.lo + m) / Rat(2);
        if (bc.count(iv.lo, m) == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
    Rat v1 = -w.eval(iv.lo) / u.eval(iv.lo);
    Rat v2 = -w.eval(iv.hi) / u.eval(iv.hi);
    // |d(w/u)| <= (|w'||u| + |w||u'|) / u^2 on the interval
    Rat nu = poly_abs_upper_bound(u, iv.lo, iv.hi);
    Rat nw = poly_abs_upper_bound(w, iv.lo, iv.hi);
    Rat ndu = poly_abs_upper_bound(u.derivative(), iv.lo, iv.hi);
    Rat ndw = poly_abs_upper_bound(w.derivative(), iv.lo, iv.hi);
    Rat lu = poly_abs_lower_bound(u, iv.lo, iv.hi);
    Rat slack = iv.width() * (ndw * nu + nw * ndu) / (lu * lu);
    return {std::min(v1, v2) - slack, std::max(v1, v2) + slack};
}

std::optional<WitnessBox> eliminate_and_search(const BPoly& f, const BPoly& g, Var elim) {
    Var ret = other(elim);
    auto chain = subresultant_polys(f, g, elim);
    UPoly res = chain[0].as_upoly(ret);
    if (res.is_zero()) throw Error("eliminate_and_search: zero resultant for coprime pair");
    if (res.deg() == 0) return std::nullopt;
    auto cf = f.coeffs_in(elim);
    auto cg = g.coeffs_in(elim);
    UPoly lead_prod = cf.back() * cg.back();
    int m = static_cast<int>(chain.size()) - 1;

    for (const auto& iv : isolate_roots(res)) {
        if (sign_at_root(lead_prod, res, iv) != 0) {
            for (int k = 1; k <= m; ++k) {
                auto sk = chain[k].coeffs_in(elim);
                sk.resize(k + 1);
                UPoly psc = sk[k];
                if (psc.is_zero() || sign_at_root(psc, res, iv) == 0) continue;
                // gcd of the specializations has degree k and equals chain[k]
                if (k == 1) {
                    auto [blo, bhi] = linear_root_bracket(sk[1], sk[0], res, iv);
                    return make_box(ret, iv, blo, bhi, "simple elimination root");
                }
                bool real_root;
                if (k % 2 == 1) {
                    real_root = true;
                } else if (k == 2) {
                    UPoly disc = sk[1] * sk[1] - Rat(4) * (sk[2] * sk[0]);
                    real_root = sign_at_root(disc, res, iv) >= 0;
                } else {
                    throw Unsupported("even gcd degree >= 4 at an algebraic elimination root");
                }
                if (!real_root) break;
                IsolatingInterval tight = shrink_until_nonvanishing(psc, res, iv);
                Rat bound = cross_root_bound(sk, tight);
                return make_box(ret, tight, -bound, bound, "multiple elimination root");
            }
            continue;  // no nonzero principal coefficient means no common root here
        }
        auto r = rational_root_in(res, iv);
        if (!r) throw Unsupported("leading coefficient vanishes at an irrational elimination root");
        UPoly fu = f.eval_partial(ret, *r);
        UPoly gu = g.eval_partial(ret, *r);
        if (fu.is_zero() && gu.is_zero())
            throw Error("eliminate_and_search: coprimality violated");
        if (fu.is_zero() || gu.is_zero()) {
            const UPoly& live = fu.is_zero() ? gu : fu;
            if (!live.is_constant() && count_real_roots(live) > 0) {
                auto viv = isolate_roots(live).front();
                if (ret == Var::x) return WitnessBox{*r, *r, viv.lo, viv.hi, "vanishing specialization"};
                return WitnessBox{viv.lo, viv.hi, *r, *r, "vanishing specialization"};
            }
            continue;
        }
        UPoly cg2 = UPoly::gcd(fu, gu);
        if (!cg2.is_constant() && count_real_roots(cg2) > 0) {
            auto viv = isolate_roots(cg2).front();
            if (ret == Var::x) return WitnessBox{*r, *r, viv.lo, viv.hi, "rational elimination root"};
            return WitnessBox{viv.lo, viv.hi, *r, *r, "rational elimination root"};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<WitnessBox> coprime_common_real_zero(const BPoly& f, const BPoly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionFailed("zero polynomial");
    if (f.is_constant() || g.is_constant()) return std::nullopt;
    int fx = f.degree_in(Var::x).value_or(0), fy = f.degree_in(Var::y).value_or(0);
    int gx = g.degree_in(Var::x).value_or(0), gy = g.degree_in(Var::y).value_or(0);
    if (fy == 0 && gy == 0) return std::nullopt;  // coprime univariate pair
    if (fx == 0 && gx == 0) return std::nullopt;
    if (fy == 0) return pure_line_case(f.as_upoly(Var::x), g, Var::x);
    if (gy == 0) return pure_line_case(g.as_upoly(Var::x), f, Var::x);
    if (fx == 0) return pure_line_case(f.as_upoly(Var::y), g, Var::y);
    if (gx == 0) return pure_line_case(g.as_upoly(Var::y), f, Var::y);
    // eliminate the variable giving the smaller Sylvester matrix; ties pick y
    if (fx + gx < fy + gy) return eliminate_and_search(f, g, Var::x);
    return eliminate_and_search(f, g, Var::y);
}

std::optional<WitnessBox> bivariate_real_zero(const BPoly& g) {
    if (g.is_constant()) throw PreconditionFailed("constant polynomial");
    YPoly yg = to_y(g);
    UPoly cont = ycontent(yg);
    if (!cont.is_constant()) {
        auto roots = isolate_roots(cont);
        if (!roots.empty())
            return WitnessBox{roots[0].lo, roots[0].hi, Rat(-1), Rat(1), "vertical line of zeros"};
    }
    YPoly pp = ydiv_scalar(yg, cont);
    if (pp.size() <= 1) {
        // depends on x only: zeros are the content's roots, handled above
        UPoly ux = pp.empty() ? UPoly() : pp[0];
        if (!ux.is_constant() && count_real_roots(ux) > 0) {
            auto iv = isolate_roots(ux).front();
            return WitnessBox{iv.lo, iv.hi, Rat(-1), Rat(1), "vertical line of zeros"};
        }
        return std::nullopt;
    }
    BPoly p = from_y(pp);
    BPoly py = p.derivative(Var::y);
    BPoly sqf = exact_div_bivariate(p, gcd_bivariate(p, py));
    YPoly ys = to_y(sqf);
    ys = ydiv_scalar(ys, ycontent(ys));
    sqf = from_y(ys);
    if (ys.size() <= 1) return std::nullopt;
    BPoly sy = sqf.derivative(Var::y);

    // sample one x per sign-invariant region of the discriminant locus
    UPoly D = ys.back();
    if (ys.size() >= 3) {
        auto ch = subresultant_polys(sqf, sy, Var::y);
        D = D * ch[0].as_upoly(Var::x);
    }
    std::vector<Rat> candidates;
    if (D.is_constant()) {
        candidates.push_back(Rat(0));
    } else {
        auto divs = isolate_roots(D);
        candidates.push_back(divs.front().lo - Rat(1));
        for (const auto& iv : divs) {
            candidates.push_back(iv.hi);
            if (auto r = rational_root_in(D, iv)) candidates.push_back(*r);
        }
        candidates.push_back(divs.back().hi + Rat(1));
    }
    for (const Rat& r : candidates) {
        UPoly slice = sqf.eval_partial(Var::x, r);
        if (slice.is_zero() || slice.is_constant()) continue;
        if (count_real_roots(slice) > 0) {
            auto iv = isolate_roots(slice).front();
            return WitnessBox{r, r, iv.lo, iv.hi, "regular curve point on a rational line"};
        }
    }
    // remaining possibilities are singular points of the curve
    return coprime_common_real_zero(sqf, sy);
}

std::optional<WitnessBox> critical_point_exists(const BPoly& p) {
    if (p.is_constant()) throw ConstantInput();
    BPoly px = p.derivative(Var::x);
    BPoly py = p.derivative(Var::y);
    if (px.is_zero()) {
        UPoly u = py.as_upoly(Var::y);  // p depends on y only
        auto roots = isolate_roots(u);
        if (roots.empty()) return std::nullopt;
        return WitnessBox{Rat(0), Rat(1), roots[0].lo, roots[0].hi, "univariate input"};
    }
    if (py.is_zero()) {
        UPoly u = px.as_upoly(Var::x);
        auto roots = isolate_roots(u);
        if (roots.empty()) return std::nullopt;
        return WitnessBox{roots[0].lo, roots[0].hi, Rat(0), Rat(1), "univariate input"};
    }
    BPoly h = gcd_bivariate(px, py);
    if (!h.is_constant()) {
        if (auto w = bivariate_real_zero(h)) {
            w->how = "common factor of the partials: " + w->how;
            return w;
        }
        px = exact_div_bivariate(px, h);
        py = exact_div_bivariate(py, h);
        if (px.is_constant() || py.is_constant()) return std::nullopt;
    }
    return coprime_common_real_zero(px, py);
}

}  // namespace rjc
