#include "rjc/levelsets.hpp"

#include <sstream>

namespace rjc {

const char* conn_rule_name(ConnRule r) {
    switch (r) {
        case ConnRule::LinearFiber: return "LinearFiber";
        case ConnRule::QuadOddDisc: return "QuadOddDisc";
        case ConnRule::QuadEvenNegDisc: return "QuadEvenNegDisc";
        case ConnRule::CubicEvenPosDisc: return "CubicEvenPosDisc";
        case ConnRule::Univariate: return "Univariate";
        case ConnRule::None: return "None";
    }
    return "?";
}

QuadDecomposition quad_discriminant(const BPoly& p, Var mainvar) {
    if (p.degree_in(mainvar).value_or(0) > 2)
        throw DegreeTooHigh("quad_discriminant: degree in the main variable exceeds 2");
    auto c = p.coeffs_in(mainvar);
    c.resize(3);
    QuadDecomposition d{c[2], c[1], c[0], UPoly()};
    d.disc = d.B * d.B - Rat(4) * (d.A * d.C);
    return d;
}

UPoly cubic_discriminant(const UPoly& A, const UPoly& B, const UPoly& C) {
    UPoly P = B - UPoly(Rat(1, 3)) * (A * A);
    UPoly Q = C - UPoly(Rat(1, 3)) * (A * B) + UPoly(Rat(2, 27)) * (A * A * A);
    return UPoly(Rat(1, 4)) * (Q * Q) + UPoly(Rat(1, 27)) * (P * P * P);
}

namespace {

std::string fmt(const char* what, const UPoly& u) {
    std::ostringstream os;
    os << what << ": " << u.to_string("t");
    return os.str();
}

// The discriminant of p - t (t the level variable) in `fiber`, as a
// bivariate polynomial in (cross variable slot = x, level slot = y).
// Checking the leading cross-coefficient against the level slot tells
// whether the rule is level-uniform.
struct LevelAware {
    BPoly value;  // variables: x = cross variable, y = level

    UPoly at_level(const Rat& c) const { return value.eval_partial(Var::y, c); }

    // degree in the cross variable, stable over all levels, with its
    // (constant) leading coefficient; empty when the lead depends on the level
    std::optional<Rat> uniform_lead() const {
        auto cs = value.coeffs_in(Var::x);
        if (cs.empty()) return std::nullopt;
        const UPoly& lead = cs.back();
        if (!lead.is_constant()) return std::nullopt;
        return lead.lc();
    }
};

LevelAware quad_disc_with_level(const UPoly& A, const UPoly& B, const UPoly& C) {
    BPoly bA = BPoly::from_upoly(A, Var::x);
    BPoly bB = BPoly::from_upoly(B, Var::x);
    BPoly bC = BPoly::from_upoly(C, Var::x) - BPoly::variable(Var::y);
    return {bB * bB - Rat(4) * (bA * bC)};
}

LevelAware cubic_disc_with_level(const UPoly& A, const UPoly& B, const UPoly& C) {
    BPoly bA = BPoly::from_upoly(A, Var::x);
    BPoly bB = BPoly::from_upoly(B, Var::x);
    BPoly bC = BPoly::from_upoly(C, Var::x) - BPoly::variable(Var::y);
    BPoly P = bB - Rat(1, 3) * (bA * bA);
    BPoly Q = bC - Rat(1, 3) * (bA * bB) + Rat(2, 27) * (bA * bA * bA);
    return {Rat(1, 4) * (Q * Q) + Rat(1, 27) * (P * P * P)};
}

}  // namespace

ConnectednessCertificate decide_connected(const BPoly& p, const Rat& level) {
    ConnectednessCertificate cert;
    cert.level = level;
    BPoly P = p - BPoly(level);

    // graph of a function: P = A(w) v + B(w), A nowhere zero
    for (Var v : {Var::y, Var::x}) {
        if (P.degree_in(v).value_or(-1) != 1) continue;
        auto cs = P.coeffs_in(v);
        const UPoly& A = cs[1];
        if (!A.is_constant() && count_real_roots(A) != 0) continue;
        if (A.is_constant() && A.lc().is_zero()) continue;
        cert.tag = ConnectednessCertificate::Tag::ConnectedAllLevels;
        cert.rule = ConnRule::LinearFiber;
        cert.fiber_var = v;
        cert.facts = {fmt("fiber coefficient", A), "fiber coefficient has no real zero",
                      "level enters only the constant term"};
        return cert;
    }

    // quadratic fiber rules
    for (Var v : {Var::x, Var::y}) {
        if (P.degree_in(v).value_or(-1) != 2) continue;
        auto cs = P.coeffs_in(v);
        cs.resize(3);
        const UPoly& A = cs[2];
        LevelAware disc = quad_disc_with_level(cs[2], cs[1], p.coeffs_in(v).size() > 0
                                                                 ? p.coeffs_in(v)[0]
                                                                 : UPoly());
        UPoly disc_at = disc.at_level(level);
        int nroots_A = A.is_constant() ? 0 : count_real_roots(A);

        if (nroots_A == 0 && !A.lc().is_zero()) {
            // nowhere-zero lead: odd-degree discriminant rule
            if (!disc_at.is_zero() && disc_at.deg() % 2 == 1) {
                cert.rule = ConnRule::QuadOddDisc;
                cert.fiber_var = v;
                cert.discriminant = disc_at;
                cert.facts = {fmt("quadratic lead", A), "lead has no real zero",
                              "discriminant degree " + std::to_string(disc_at.deg()) + " is odd"};
                auto lead = disc.uniform_lead();
                if (lead && !lead->is_zero()) {
                    cert.tag = ConnectednessCertificate::Tag::ConnectedAllLevels;
                    cert.facts.push_back("discriminant lead independent of the level");
                } else {
                    cert.tag = ConnectednessCertificate::Tag::ConnectedZeroLevel;
                }
                return cert;
            }
            continue;
        }

        if (nroots_A == 1) {
            // lead vanishes exactly once: even discriminant with negative lead
            auto aroot = isolate_roots(A).front();
            int sB = sign_at_root(cs[1], A, aroot);
            if (sB == 0) continue;  // no unique base point on the vanishing line
            if (disc_at.is_zero() || disc_at.deg() % 2 != 0 || disc_at.lc().sign() >= 0)
                continue;
            cert.rule = ConnRule::QuadEvenNegDisc;
            cert.fiber_var = v;
            cert.discriminant = disc_at;
            cert.facts = {fmt("quadratic lead", A), "lead has exactly one real zero",
                          "linear coefficient nonzero at that zero (unique base point)",
                          "discriminant degree " + std::to_string(disc_at.deg()) +
                              " is even with negative lead " + disc_at.lc().to_string()};
            auto lead = disc.uniform_lead();
            if (lead && lead->sign() < 0) {
                cert.tag = ConnectednessCertificate::Tag::ConnectedAllLevels;
                cert.facts.push_back("discriminant lead independent of the level");
            } else {
                cert.tag = ConnectednessCertificate::Tag::ConnectedZeroLevel;
            }
            return cert;
        }
    }

    // monic-cubic fiber rule (after normalizing a constant lead)
    for (Var v : {Var::x, Var::y}) {
        if (P.degree_in(v).value_or(-1) != 3) continue;
        auto cs = P.coeffs_in(v);
        cs.resize(4);
        if (!cs[3].is_constant() || cs[3].lc().is_zero()) continue;
        Rat inv = cs[3].lc().inverse();
        UPoly A = inv * cs[2], B = inv * cs[1], C = inv * cs[0];
        // the level was already folded into cs[0]; rebuild with a symbolic level
        UPoly C0 = inv * p.coeffs_in(v)[0];
        LevelAware disc = cubic_disc_with_level(A, B, C0);
        // the level enters as -t/lead: rescale the level slot accordingly
        BPoly scaled;
        for (const auto& [ij, coef] : disc.value.terms())
            scaled = scaled + BPoly::monomial(coef * inv.pow(ij.second), ij.first, ij.second);
        disc.value = scaled;
        UPoly D = disc.at_level(level);
        if (D.is_zero() || D.deg() % 2 != 0 || D.lc().sign() <= 0) continue;
        cert.rule = ConnRule::CubicEvenPosDisc;
        cert.fiber_var = v;
        cert.discriminant = D;
        cert.facts = {"monic cubic fiber (constant lead " + cs[3].lc().to_string() + ")",
                      "discriminant degree " + std::to_string(D.deg()) +
                          " is even with positive lead " + D.lc().to_string()};
        auto lead = disc.uniform_lead();
        if (lead && lead->sign() > 0) {
            cert.tag = ConnectednessCertificate::Tag::ConnectedAllLevels;
            cert.facts.push_back("discriminant lead independent of the level");
        } else {
            cert.tag = ConnectednessCertificate::Tag::ConnectedZeroLevel;
        }
        return cert;
    }

    cert.tag = ConnectednessCertificate::Tag::Undetermined;
    cert.rule = ConnRule::None;
    return cert;
}

namespace {

// smallest integer r with r^k >= v
Int ceil_kth_root(const Rat& v, int k) {
    if (v.sign() <= 0) return 0;
    Int c = v.num() / v.den() + 1;  // >= v
    Int r;
    mpz_root(r.get_mpz_t(), c.get_mpz_t(), k);
    Int rk;
    mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
    if (Rat(rk) >= v) return r;
    return r + 1;
}

}  // namespace

Rat strip_bound(const BPoly& p, Var var, const Rat& lo, const Rat& hi) {
    if (lo > hi) throw Error("strip_bound: empty interval");
    auto cs = p.coeffs_in(var);
    if (cs.size() <= 1) throw Error("strip_bound: polynomial is constant in the variable");
    const UPoly& lead = cs.back();
    if (!lead.is_constant()) {
        if (lead.eval(lo).is_zero() || lead.eval(hi).is_zero()) throw LeadingCoeffVanishesOnStrip();
        if (lo < hi && count_real_roots(lead, std::make_pair(lo, hi)) > 0)
            throw LeadingCoeffVanishesOnStrip();
    } else if (lead.lc().is_zero()) {
        throw LeadingCoeffVanishesOnStrip();
    }
    int n = static_cast<int>(cs.size()) - 1;
    Rat lower = lead.is_constant() ? lead.lc().abs() : poly_abs_lower_bound(lead, lo, hi);
    Rat bound(1);
    for (int k = 1; k <= n; ++k) {
        const UPoly& a = cs[n - k];
        if (a.is_zero()) continue;
        Rat sup = poly_abs_upper_bound(a, lo, hi) / lower;
        bound += Rat(ceil_kth_root(Rat(n) * sup, k));
    }
    return bound;
}

}  // namespace rjc
