#include "rjc/hrc.hpp"

#include <cmath>
#include <limits>

namespace rjc {

HrcRegion hrc_region(const Family& f) {
    std::string a02 = f.a02.to_string();
    switch (f.id) {
        case 1:
            return {f,
                    "{ -1 <= y < 0, 0 <= x <= -1/y - y^2 } together with the ray "
                    "{ y = 0, x >= 0 }"};
        case 2:
            return {f, "{ -1 <= y < 0, -1/y^2 - (" + a02 + ")/y <= x <= " + a02 + " - 1 }"};
        case 3:
            return {f, "{ x >= 1, -1/x^2 <= y <= 0 }"};
        case 4:
            return {f, "{ -1 <= y < 0, sqrt(2 - " + a02 + ") <= x <= sqrt(-1/y - " + a02 +
                           " - y) }"};
    }
    throw PreconditionFailed("family id must be 1..4");
}

BPoly jacobian_det(const BPoly& p, const BPoly& q) {
    return p.derivative(Var::x) * q.derivative(Var::y) - p.derivative(Var::y) * q.derivative(Var::x);
}

int tau(const Family& f, const BPoly& h) {
    if (h.is_zero()) throw ZeroPolynomial();
    bool use_min = f.id == 1 || f.id == 2;
    int best = 0;
    bool first = true;
    for (const auto& [ij, c] : h.terms()) {
        auto [i, j] = ij;
        int e;
        switch (f.id) {
            case 1: e = j - i - 1; break;
            case 2: e = j - 2 * i - 2; break;
            default: e = i - 2 * j - 3; break;
        }
        if (first) {
            best = e;
            first = false;
        } else {
            best = use_min ? std::min(best, e) : std::max(best, e);
        }
    }
    return best;
}

DivergenceVerdict divergence_verdict(const Family& f, const BPoly& h) {
    if (h.is_zero()) throw PreconditionFailed("h is zero");
    if (f.id == 1 || f.id == 2) {
        if (h.coeff(0, 0).is_zero())
            throw PreconditionFailed("families 1 and 2 require h(0,0) != 0");
        return {true, tau(f, h)};  // the edge exponent is negative once b00 != 0
    }
    int t = tau(f, h);
    return {t >= -1, t};
}

// ---------------------------------------------------------------------------
// numeric region integrals

namespace {

// antiderivative coefficients of h in `var`
std::vector<std::vector<double>> antiderivative_table(const BPoly& h, Var var) {
    // table[i][j] multiplies x^i y^j of the antiderivative
    int dx = h.degree_in(Var::x).value_or(0) + 1;
    int dy = h.degree_in(Var::y).value_or(0) + 1;
    std::vector<std::vector<double>> t(dx + 1, std::vector<double>(dy + 1, 0.0));
    for (const auto& [ij, c] : h.terms()) {
        auto [i, j] = ij;
        if (var == Var::x)
            t[i + 1][j] = c.to_double() / (i + 1);
        else
            t[i][j + 1] = c.to_double() / (j + 1);
    }
    return t;
}

double eval_table(const std::vector<std::vector<double>>& t, double x, double y) {
    double r = 0.0;
    double xp = 1.0;
    for (size_t i = 0; i < t.size(); ++i) {
        double yp = 1.0, row = 0.0;
        for (size_t j = 0; j < t[i].size(); ++j) {
            row += t[i][j] * yp;
            yp *= y;
        }
        r += row * xp;
        xp *= x;
    }
    return r;
}

constexpr int kPanels = 1 << 12;

// midpoint rule over [lo, hi] of slice(t), fixed panel count, fixed order
template <class F>
double midpoint(double lo, double hi, F slice) {
    double w = (hi - lo) / kPanels;
    double acc = 0.0;
    for (int i = 0; i < kPanels; ++i) acc += slice(lo + (i + 0.5) * w);
    return acc * w;
}

// dyadic subranges of [eps, 1] shrinking toward 0: [1/2, 1], [1/4, 1/2], ...
template <class F>
double integrate_toward_zero(double eps, F slice) {
    double acc = 0.0;
    double hi = 1.0;
    while (hi > eps) {
        double lo = std::max(eps, hi / 2);
        acc += midpoint(lo, hi, slice);
        hi = lo;
    }
    return acc;
}

// dyadic subranges of [1, bound] growing from 1: [1, 2], [2, 4], ...
template <class F>
double integrate_toward_infinity(double bound, F slice) {
    double acc = 0.0;
    double lo = 1.0;
    while (lo < bound) {
        double hi = std::min(bound, lo * 2);
        acc += midpoint(lo, hi, slice);
        lo = hi;
    }
    return acc;
}

}  // namespace

double truncated_integral(const Family& f, const BPoly& h, const Rat& eps) {
    if (eps.sign() <= 0) throw PreconditionFailed("eps must be positive");
    if (h.is_zero()) return 0.0;
    double e = eps.to_double();
    double a02 = f.a02.to_double();
    switch (f.id) {
        case 1: {
            auto H = antiderivative_table(h, Var::x);
            // y in [-1, -eps], x from 0 to -1/y - y^2
            return integrate_toward_zero(e, [&](double t) {
                double y = -t;
                double xhi = -1.0 / y - y * y;
                return eval_table(H, xhi, y) - eval_table(H, 0.0, y);
            });
        }
        case 2: {
            auto H = antiderivative_table(h, Var::x);
            return integrate_toward_zero(e, [&](double t) {
                double y = -t;
                double xlo = -1.0 / (y * y) - a02 / y;
                double xhi = a02 - 1.0;
                return eval_table(H, xhi, y) - eval_table(H, xlo, y);
            });
        }
        case 3: {
            auto H = antiderivative_table(h, Var::y);
            // x in [1, 1/eps], y from -1/x^2 to 0
            return integrate_toward_infinity(1.0 / e, [&](double x) {
                double ylo = -1.0 / (x * x);
                return eval_table(H, x, 0.0) - eval_table(H, x, ylo);
            });
        }
        case 4: {
            auto H = antiderivative_table(h, Var::x);
            return integrate_toward_zero(e, [&](double t) {
                double y = -t;
                double lo2 = 2.0 - a02;
                double hi2 = -1.0 / y - a02 - y;
                if (hi2 <= lo2) return 0.0;
                return eval_table(H, std::sqrt(hi2), y) - eval_table(H, std::sqrt(lo2), y);
            });
        }
    }
    throw PreconditionFailed("family id must be 1..4");
}

UPoly L_theta(const BPoly& q) {
    UPoly L;
    for (const auto& [ij, c] : q.terms()) {
        auto [i, j] = ij;
        if (i != 2 * j + 1) continue;
        // c * (2(j - i) theta - i) theta^j
        L = L + UPoly::monomial(c * Rat(2L * (j - i)), j + 1) + UPoly::monomial(c * Rat(-i), j);
    }
    return L;
}

RefutationCertificate refute_pair(const Family& f, const BPoly& q) {
    if (q.is_constant()) throw PreconditionFailed("q must be nonconstant");
    BPoly p = family_poly(f);
    BPoly h = jacobian_det(p, q);
    RefutationCertificate cert;
    Rat v0 = h.eval(Rat(0), Rat(0));
    if (v0.sign() <= 0) {
        cert.tag = RefutationCertificate::Tag::PointWitness;
        cert.x = Rat(0);
        cert.y = Rat(0);
        cert.value = v0;
        cert.trace = {"h(0,0) = " + v0.to_string() + " <= 0"};
        return cert;
    }
    cert.trace.push_back("h(0,0) = " + v0.to_string() + " > 0");
    int t = tau(f, h);
    if (f.id == 1 || f.id == 2) {
        cert.tag = RefutationCertificate::Tag::DivergenceCertificate;
        cert.tau = t;
        cert.trace.push_back("edge exponent tau = " + std::to_string(t) +
                             " < 0: the region integral of a positive h diverges");
        return cert;
    }
    if (t >= -1) {
        cert.tag = RefutationCertificate::Tag::DivergenceCertificate;
        cert.tau = t;
        cert.trace.push_back("tau = " + std::to_string(t) + " >= -1: region integral diverges");
        return cert;
    }
    cert.trace.push_back("tau = " + std::to_string(t) + " < -1: divergence unavailable");
    UPoly L = L_theta(q);
    if (L.is_zero()) {
        // all terms with i = 2j+1 vanish, so in particular h(0,0) = -b10 = 0,
        // contradicting h(0,0) > 0 above
        throw Error("refute_pair: L identically zero with h(0,0) > 0");
    }
    SignCertificate sc = sign_certificate(L);
    if (sc.tag != SignCertificate::Tag::NegativeWitness)
        throw LemmaViolation("L(theta) is nonzero yet admits no negative value");
    Rat theta1 = *sc.witness;
    cert.trace.push_back("L(theta) nonzero, L(" + theta1.to_string() + ") = " +
                         L.eval(theta1).to_string() + " < 0");
    Rat x(1);
    for (int step = 0; step < 64; ++step) {
        Rat y = theta1 / (x * x);
        Rat val = h.eval(x, y);
        if (val.sign() <= 0) {
            cert.tag = RefutationCertificate::Tag::PointWitness;
            cert.x = x;
            cert.y = y;
            cert.value = val;
            cert.trace.push_back("witness at x = " + x.to_string() + ", y = theta1/x^2");
            return cert;
        }
        x *= Rat(2);
    }
    throw Error("refute_pair: witness search exceeded 2^64");
}

}  // namespace rjc
