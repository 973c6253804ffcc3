#include "rjc/realroots.hpp"

#include <algorithm>
#include <cassert>

namespace rjc {

namespace {

// Scale by a positive rational so coefficients become integers with gcd 1.
// Positive scaling preserves the sign pattern, which is all Sturm needs.
UPoly primitive_scale(const UPoly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1), num_gcd(0);
    for (const Rat& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    for (const Rat& c : p.coeffs()) {
        if (c.is_zero()) continue;
        Int n = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    return Rat(den_lcm, num_gcd) * p;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

SturmChain::SturmChain(const UPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial();
    chain_.push_back(primitive_scale(u));
    UPoly d = u.derivative();
    if (d.is_zero()) return;
    chain_.push_back(primitive_scale(d));
    while (true) {
        const UPoly& a = chain_[chain_.size() - 2];
        const UPoly& b = chain_.back();
        UPoly r = UPoly::divrem(a, b).second;
        if (r.is_zero()) break;
        chain_.push_back(primitive_scale(-r));
    }
}

int SturmChain::variations(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const UPoly& p : chain_) signs.push_back(p.eval(x).sign());
    return sign_changes(signs);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> signs;
    for (const UPoly& p : chain_) {
        int s = p.lc().sign();
        if (!p.is_zero() && p.deg() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_changes(signs);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> signs;
    for (const UPoly& p : chain_) signs.push_back(p.lc().sign());
    return sign_changes(signs);
}

int SturmChain::count(const Rat& a, const Rat& b) const {
    assert(a < b);
    return variations(a) - variations(b);
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

SquarefreeDecomposition squarefree_decomposition(const UPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial();
    SquarefreeDecomposition out;
    out.lead = u.lc();
    if (u.deg() == 0) return out;
    UPoly f = u.monic();
    // Yun's algorithm
    UPoly g = UPoly::gcd(f, f.derivative());
    UPoly w = UPoly::exact_div(f, g);
    UPoly z = UPoly::exact_div(f.derivative(), g) - w.derivative();
    int mult = 1;
    while (!w.is_constant()) {
        UPoly a = UPoly::gcd(w, z);
        if (!a.is_constant()) out.parts.emplace_back(a, mult);
        w = UPoly::exact_div(w, a);
        z = UPoly::exact_div(z, a) - w.derivative();
        ++mult;
    }
    return out;
}

int count_real_roots(const UPoly& u, std::optional<std::pair<Rat, Rat>> interval) {
    if (u.is_zero()) throw ZeroPolynomial();
    if (u.deg() == 0) return 0;
    SturmChain chain(u);
    if (!interval) return chain.count_all();
    const auto& [a, b] = *interval;
    if (a >= b) throw Error("count_real_roots: empty interval");
    if (u.eval(a).is_zero() || u.eval(b).is_zero()) throw EndpointIsRoot();
    return chain.count(a, b);
}

namespace {

// A point in (lo, hi) where sf does not vanish; halving nudges terminate
// because sf has finitely many roots.
Rat interior_nonroot(const UPoly& sf, const Rat& lo, const Rat& hi) {
    Rat m = (lo + hi) / Rat(2);
    while (sf.eval(m).is_zero()) m = (lo + m) / Rat(2);
    return m;
}

struct Isolator {
    const UPoly& sf;
    SturmChain chain;

    explicit Isolator(const UPoly& p) : sf(p), chain(p) {}

    void split(const Rat& lo, const Rat& hi, int cnt, std::vector<std::pair<Rat, Rat>>& out) {
        if (cnt == 0) return;
        if (cnt == 1) {
            out.emplace_back(lo, hi);
            return;
        }
        Rat m = interior_nonroot(sf, lo, hi);
        int left = chain.count(lo, m);
        split(lo, m, left, out);
        split(m, hi, cnt - left, out);
    }
};

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial();
    if (u.deg() == 0) return {};
    auto dec = squarefree_decomposition(u);
    UPoly sf(Rat(1));
    for (const auto& [part, mult] : dec.parts) sf = sf * part;
    if (sf.is_constant()) return {};
    Isolator iso(sf);
    Rat bound = sf.root_bound();
    int total = iso.chain.count(-bound, bound);
    std::vector<std::pair<Rat, Rat>> raw;
    iso.split(-bound, bound, total, raw);
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<IsolatingInterval> out;
    out.reserve(raw.size());
    for (const auto& [lo, hi] : raw) {
        int mult = 0;
        for (const auto& [part, m] : dec.parts) {
            if (part.is_constant()) continue;
            SturmChain pc(part);
            if (part.eval(lo).is_zero() || part.eval(hi).is_zero())
                throw Error("isolate_roots: internal endpoint invariant broken");
            if (pc.count(lo, hi) == 1) {
                mult = m;
                break;
            }
        }
        assert(mult > 0);
        out.push_back({lo, hi, mult});
    }
    return out;
}

IsolatingInterval refine(const UPoly& u, const IsolatingInterval& iv, const Rat& width) {
    if (u.is_zero()) throw ZeroPolynomial();
    UPoly sf = u.squarefree_part();
    SturmChain chain(sf);
    Rat lo = iv.lo, hi = iv.hi;
    if (chain.count(lo, hi) != 1) throw Error("refine: interval does not isolate a root");
    while (hi - lo >= width) {
        Rat m = interior_nonroot(sf, lo, hi);
        if (chain.count(lo, m) == 1)
            hi = m;
        else
            lo = m;
    }
    return {lo, hi, iv.multiplicity};
}

SignCertificate sign_certificate(const UPoly& u) {
    if (u.is_zero()) return {SignCertificate::Tag::IdenticallyZero, std::nullopt};
    if (u.is_constant()) {
        if (u.lc().sign() > 0) return {SignCertificate::Tag::NonnegativeEverywhere, std::nullopt};
        return {SignCertificate::Tag::NegativeWitness, Rat(0)};
    }
    auto dec = squarefree_decomposition(u);
    bool all_even = true;
    for (const auto& [part, mult] : dec.parts) {
        if (mult % 2 == 0) continue;
        if (count_real_roots(part) > 0) {
            all_even = false;
            break;
        }
    }
    if (u.deg() % 2 == 0 && u.lc().sign() > 0 && all_even)
        return {SignCertificate::Tag::NonnegativeEverywhere, std::nullopt};

    // u takes a negative value; its sign is constant between consecutive
    // roots, and the isolating-interval endpoints land in every such gap:
    // try those (and the interval midpoints), then the outer Cauchy bounds.
    std::vector<Rat> candidates;
    for (const auto& iv : isolate_roots(u)) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.midpoint());
        candidates.push_back(iv.hi);
    }
    Rat bound = u.root_bound();
    candidates.push_back(-bound);
    candidates.push_back(bound);
    for (const Rat& z : candidates)
        if (u.eval(z).sign() < 0) return {SignCertificate::Tag::NegativeWitness, z};
    throw Error("sign_certificate: witness search failed (unreachable)");
}

namespace {

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

}  // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error("simplest_rational_between: empty interval");
    if (lo.sign() < 0 && hi.sign() > 0) return Rat(0);
    if (hi.sign() <= 0) return -simplest_rational_between(-hi, -lo);
    // 0 <= lo < hi
    Int fl = floor_rat(lo);
    Int fl1 = fl + 1;
    if (Rat(fl1) < hi) return Rat(fl1);
    if (lo == Rat(fl)) {
        // lo is an integer and (lo, hi) contains no integer:
        // lo + 1/n for the smallest workable n
        Rat gap = hi - lo;
        Int n = floor_rat(gap.inverse()) + 1;
        return lo + Rat(Int(1), n);
    }
    // recurse on the fractional parts
    Rat flo = lo - Rat(fl), fhi = hi - Rat(fl);
    return Rat(fl) + simplest_rational_between(fhi.inverse(), flo.inverse()).inverse();
}

std::optional<Rat> rational_root_in(const UPoly& u, const IsolatingInterval& iv) {
    if (u.is_zero()) throw ZeroPolynomial();
    UPoly sf = primitive_scale(u.squarefree_part());
    // any rational root s/t (lowest terms) of an integer polynomial has
    // t dividing the leading coefficient; two rationals with denominators
    // <= t differ by at least 1/t^2, so refining below that width makes the
    // root the unique simplest rational in the interval.
    Int t = sf.lc().num();  // integer coefficients, lc > 0 after scaling
    Rat width = Rat(Int(1), t * t) / Rat(2);
    IsolatingInterval fine = refine(sf, {iv.lo, iv.hi, 1}, width);
    Rat cand = simplest_rational_between(fine.lo, fine.hi);
    if (u.eval(cand).is_zero()) return cand;
    return std::nullopt;
}

Rat poly_abs_upper_bound(const UPoly& u, const Rat& lo, const Rat& hi) {
    Rat k = std::max(lo.abs(), hi.abs());
    Rat s(0), pw(1);
    for (const Rat& c : u.coeffs()) {
        s += c.abs() * pw;
        pw *= k;
    }
    return s;
}

Rat poly_abs_lower_bound(const UPoly& u, const Rat& lo, const Rat& hi) {
    Rat vlo = u.eval(lo).abs(), vhi = u.eval(hi).abs();
    if (vlo.is_zero() || vhi.is_zero()) throw Error("poly_abs_lower_bound: root at endpoint");
    Rat m = std::min(vlo, vhi);
    Rat slope = poly_abs_upper_bound(u.derivative(), lo, hi);
    Rat drop = slope * (hi - lo);
    if (m > drop) return m - drop;
    Rat mid = (lo + hi) / Rat(2);
    if (u.eval(mid).is_zero()) throw Error("poly_abs_lower_bound: root in interval");
    return std::min(poly_abs_lower_bound(u, lo, mid), poly_abs_lower_bound(u, mid, hi));
}

int sign_at_root(const UPoly& u, const UPoly& v, const IsolatingInterval& root) {
    if (v.is_zero()) throw ZeroPolynomial();
    if (v.eval(root.lo).is_zero() || v.eval(root.hi).is_zero()) throw EndpointIsRoot();
    if (u.is_zero()) return 0;
    UPoly g = UPoly::gcd(u, v);
    if (!g.is_constant()) {
        // Roots of g are roots of v, so the interval endpoints are not roots
        // of g and the count below is exact.
        SturmChain gc(g);
        if (gc.count(root.lo, root.hi) >= 1) return 0;
    }
    // u has no root at the target; shrink until u is sign-constant there.
    UPoly sf = v.squarefree_part();
    SturmChain vc(sf);
    Rat lo = root.lo, hi = root.hi;
    if (vc.count(lo, hi) != 1) throw Error("sign_at_root: interval does not isolate a root");
    SturmChain uc(u);
    while (true) {
        if (!u.eval(lo).is_zero() && !u.eval(hi).is_zero() && uc.count(lo, hi) == 0)
            return u.eval(lo).sign();
        Rat m = interior_nonroot(sf, lo, hi);
        if (vc.count(lo, m) == 1)
            hi = m;
        else
            lo = m;
    }
}

}  // namespace rjc
