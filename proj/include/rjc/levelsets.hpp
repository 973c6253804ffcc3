#pragma once

#include <string>
#include <vector>

#include "rjc/bpoly.hpp"
#include "rjc/realroots.hpp"

namespace rjc {

/// Connectedness rules, by what they verify about the fiber direction.
enum class ConnRule {
    LinearFiber,        // p = A*v + B with A nowhere zero: graph of a function
    QuadOddDisc,        // quadratic fiber, nowhere-zero lead, odd-degree discriminant
    QuadEvenNegDisc,    // quadratic fiber, lead vanishing once, even discriminant with negative lead
    CubicEvenPosDisc,   // monic cubic fiber, even-degree discriminant with positive lead
    Univariate,         // depends on one variable with an injective fiber map
    None,
};

const char* conn_rule_name(ConnRule r);

/// Records every hypothesis verified so a checker can revalidate the
/// certificate from its data alone. Conclusions are conditional on the input
/// being a submersion where the underlying statements require it.
struct ConnectednessCertificate {
    enum class Tag { ConnectedAllLevels, ConnectedZeroLevel, Undetermined };
    Tag tag = Tag::Undetermined;
    ConnRule rule = ConnRule::None;
    Var fiber_var = Var::x;  // the quadratic/cubic variable
    Rat level;
    UPoly discriminant;  // at the checked level, when a discriminant rule fired
    std::vector<std::string> facts;
};

struct QuadDecomposition {
    UPoly A, B, C, disc;  // p = A v^2 + B v + C, disc = B^2 - 4AC
};

/// Decompose p as a quadratic in `mainvar`; throws DegreeTooHigh above 2.
QuadDecomposition quad_discriminant(const BPoly& p, Var mainvar);

/// Discriminant of the monic cubic v^3 + A v^2 + B v + C:
/// D = Q^2/4 + P^3/27 with P = B - A^2/3, Q = C - A*B/3 + 2A^3/27.
/// D < 0: three distinct real roots; D = 0: real with a repeated root;
/// D > 0: one real root.
UPoly cubic_discriminant(const UPoly& A, const UPoly& B, const UPoly& C);

/// Tries the connectedness rules in order (linear fiber, then quadratic
/// discriminant rules in each variable, then the cubic rule) and returns the
/// first certificate that fully verifies, else Undetermined. Never claims
/// disconnectedness.
ConnectednessCertificate decide_connected(const BPoly& p, const Rat& level);

/// A rational bound R such that every zero of p with the cross variable in
/// the closed interval has |var| <= R. Sound over-approximation of
/// 1 + sum_k (n * sup|a_{n-k}/a_n|)^(1/k). Requires the leading coefficient
/// of p in `var` to have no zero on the interval.
Rat strip_bound(const BPoly& p, Var var, const Rat& lo, const Rat& hi);

}  // namespace rjc
