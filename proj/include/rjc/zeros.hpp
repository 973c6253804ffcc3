#pragma once

#include <optional>
#include <string>

#include "rjc/realroots.hpp"
#include "rjc/subres.hpp"

namespace rjc {

/// Quadratic shape lead*v^2 + lin*v + cst with coefficients univariate in
/// the other variable.
struct QuadShape {
    UPoly lead, lin, cst;
    BPoly to_bpoly(Var v) const;
    static QuadShape from(const BPoly& p, Var v);  // throws DegreeTooHigh
};

/// Cubic shape lead*v^3 + quad*v^2 + lin*v + cst.
struct CubicShape {
    UPoly lead, quad, lin, cst;
    BPoly to_bpoly(Var v) const;
    static CubicShape from(const BPoly& p, Var v);
};

struct QuadCubicPair {
    QuadShape p;
    CubicShape q;
};

struct QuadQuadPair {
    QuadShape p;
    QuadShape q;
};

struct ZeroVerdict {
    enum class Tag { CommonRealZeroExists, NoCommonRealZeroOnLine, HypothesesNotMet };
    Tag tag;
    /// Locator for the x at which the specializations share a real root.
    std::optional<IsolatingInterval> witness_x;
    std::optional<Rat> witness_x_rational;
    std::string note;
};

/// Sufficient criterion for a common real zero of a (quadratic, cubic) pair
/// in y: R0 shares no zero with the cubic's leading coefficient and
/// lc(R0) * R0 takes a negative value.
ZeroVerdict common_zero_quad_cubic(const QuadCubicPair& pair);

/// Same criterion for a (quadratic, quadratic) pair; R0 must share no zero
/// with either leading coefficient.
ZeroVerdict common_zero_quad_quad(const QuadQuadPair& pair);

/// Exact decision on the line x = alpha when R0(alpha) = lead_p(alpha) = 0
/// and R0 shares no zero with lead_q: a common real zero exists iff
/// lin_p(alpha) != 0, or p(alpha, .) vanishes identically and the second
/// quadratic has a real root there.
ZeroVerdict common_zero_quad_quad_at(const QuadQuadPair& pair, const Rat& alpha);

/// Variant driven by roots of R1: some z has R1(z) = 0, lc(R0)*lead_p(z) > 0
/// and lead_q(z) != 0.
ZeroVerdict common_zero_quad_cubic_r1(const QuadCubicPair& pair);

/// Variant for the (quad, quad) pair: lc(R0) > 0 and some z has R1(z) = 0
/// with lead_p(z) * lead_q(z) != 0.
ZeroVerdict common_zero_quad_quad_r1(const QuadQuadPair& pair);

/// Axis-aligned box. Degenerate (exact) coordinates are allowed.
struct WitnessBox {
    Rat xlo, xhi, ylo, yhi;
    std::string how;  // construction note
};

/// Decides whether grad p vanishes somewhere in R^2; on success returns a
/// box containing a critical point. Exact; throws Unsupported on inputs
/// outside the implemented elimination cases (cannot occur for total degree
/// <= 4).
std::optional<WitnessBox> critical_point_exists(const BPoly& p);

/// Decides whether two coprime polynomials share a real zero.
std::optional<WitnessBox> coprime_common_real_zero(const BPoly& f, const BPoly& g);

/// Decides whether a single nonconstant polynomial has a real zero.
std::optional<WitnessBox> bivariate_real_zero(const BPoly& g);

/// Bivariate gcd (primitive pseudo-remainder sequence in y).
BPoly gcd_bivariate(const BPoly& f, const BPoly& g);

/// Exact division of bivariate polynomials (throws if not divisible).
BPoly exact_div_bivariate(const BPoly& f, const BPoly& g);

}  // namespace rjc
