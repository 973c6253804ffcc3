#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rjc/upoly.hpp"

namespace rjc {

/// An interval (lo, hi] containing exactly one root of the square-free part
/// of the target polynomial; both endpoints are non-roots, so the root is
/// interior. `multiplicity` is the root's multiplicity in the original
/// polynomial.
struct IsolatingInterval {
    Rat lo;
    Rat hi;
    int multiplicity = 1;

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / Rat(2); }
};

struct SignCertificate {
    enum class Tag { NonnegativeEverywhere, IdenticallyZero, NegativeWitness };
    Tag tag;
    std::optional<Rat> witness;  // z with u(z) < 0, exact
};

/// Sturm chain with exact rational remainders; each element is scaled to a
/// primitive integer-coefficient polynomial (positive factor) for size control.
class SturmChain {
  public:
    explicit SturmChain(const UPoly& u);

    /// Sign variations of the chain evaluated at x.
    int variations(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    /// Distinct roots of u in (a, b); requires u(a) != 0 and u(b) != 0.
    int count(const Rat& a, const Rat& b) const;
    /// Distinct real roots of u on all of R.
    int count_all() const;

    const std::vector<UPoly>& chain() const { return chain_; }

  private:
    std::vector<UPoly> chain_;
};

/// u = lead * prod part_i ^ mult_i with monic, pairwise coprime, square-free
/// parts, ordered by multiplicity. lead = lc(u).
struct SquarefreeDecomposition {
    Rat lead;
    std::vector<std::pair<UPoly, int>> parts;
};

SquarefreeDecomposition squarefree_decomposition(const UPoly& u);

/// Distinct real roots, globally or in an open interval whose endpoints are
/// not roots (throws EndpointIsRoot otherwise).
int count_real_roots(const UPoly& u, std::optional<std::pair<Rat, Rat>> interval = std::nullopt);

/// Disjoint isolating intervals for all real roots of u, sorted by lower
/// bound, with multiplicities.
std::vector<IsolatingInterval> isolate_roots(const UPoly& u);

/// Shrink an isolating interval for a root of u below the requested width.
IsolatingInterval refine(const UPoly& u, const IsolatingInterval& iv, const Rat& width);

/// Decides whether u >= 0 on all of R; otherwise produces an exact rational
/// witness z with u(z) < 0. Witness search is deterministic.
SignCertificate sign_certificate(const UPoly& u);

/// Sign of u at the root of v isolated by `root`: -1, 0, +1 (0 exactly when
/// gcd(u, v) vanishes at the root).
int sign_at_root(const UPoly& u, const UPoly& v, const IsolatingInterval& root);

/// The rational with smallest denominator (then smallest |numerator|) in the
/// open interval (lo, hi).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

/// The rational root of u isolated by `iv`, if that root is rational.
std::optional<Rat> rational_root_in(const UPoly& u, const IsolatingInterval& iv);

/// Upper bound for |u| on [lo, hi] (crude, sound).
Rat poly_abs_upper_bound(const UPoly& u, const Rat& lo, const Rat& hi);

/// Positive lower bound for |u| on [lo, hi]; requires u to have no root in
/// the closed interval.
Rat poly_abs_lower_bound(const UPoly& u, const Rat& lo, const Rat& hi);

}  // namespace rjc
