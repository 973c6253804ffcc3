#pragma once

#include <string>
#include <vector>

#include "rjc/classify.hpp"

namespace rjc {

/// The singular foliation region attached to a family, with its parametric
/// bounds rendered as text (used in verdicts and reports).
struct HrcRegion {
    Family family;
    std::string description;
};

HrcRegion hrc_region(const Family& f);

/// det D(p, q) = p_x q_y - p_y q_x, exact.
BPoly jacobian_det(const BPoly& p, const BPoly& q);

/// The family's edge exponent over the nonzero terms b_ij of h:
///   family 1: min(j - i - 1); family 2: min(j - 2i - 2);
///   families 3, 4: max(i - 2j - 3).
int tau(const Family& f, const BPoly& h);

struct DivergenceVerdict {
    bool diverges;
    int tau;
};

/// Families 1 and 2 (requires h(0,0) != 0): the region integral of a
/// positive h always diverges. Families 3 and 4: diverges iff tau >= -1.
DivergenceVerdict divergence_verdict(const Family& f, const BPoly& h);

/// Numeric integral of h over the family region truncated away from the
/// singular edge (families 1, 2, 4: y in [-1, -eps]; family 3: x in
/// [1, 1/eps]). Deterministic midpoint quadrature on dyadic subranges with
/// 2^12 panels each; error O(panels^-2) per subrange. Diagnostic only.
double truncated_integral(const Family& f, const BPoly& h, const Rat& eps);

/// L(theta) = sum over terms of q with i = 2j + 1 of
/// b_ij (2(j - i) theta - i) theta^j.
UPoly L_theta(const BPoly& q);

struct RefutationCertificate {
    enum class Tag { PointWitness, DivergenceCertificate };
    Tag tag;
    Rat x, y, value;  // PointWitness: value = h(x, y) <= 0, exact
    int tau = 0;      // DivergenceCertificate
    std::vector<std::string> trace;
};

/// Produces, for any nonconstant q, a certificate that det D(p_family, q)
/// is not everywhere positive: either an exact point with h <= 0 or a
/// divergence certificate for the region integral.
RefutationCertificate refute_pair(const Family& f, const BPoly& q);

}  // namespace rjc
