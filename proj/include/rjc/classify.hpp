#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rjc/levelsets.hpp"
#include "rjc/zeros.hpp"

namespace rjc {

/// Case labels of the classical normal-form list for real binary quartics,
/// recovered from the projective root pattern of the degree-4 part.
enum class QuarticLabel { I, II, III, IV, V, VI, VII, VIII, IX };

const char* quartic_label_name(QuarticLabel l);

struct QuarticCase {
    QuarticLabel label;
    /// (multiplicity, is_real) per projective root, sorted by multiplicity
    /// descending then real-first; conjugate pairs contribute two entries.
    std::vector<std::pair<int, bool>> root_pattern;
};

/// The four canonical degree-4 normal forms with disconnected level sets.
struct Family {
    int id = 0;   // 1..4
    Rat a02;      // family 2: 0 or 1; family 4: a02^2 < 3; unused otherwise

    static Family make(int id, const Rat& a02 = Rat(0));  // validates parameters
};

/// The canonical representative polynomial of a family:
///   1: y + x y^2 + y^4
///   2: y + a02 y^2 + x y^3
///   3: y + x^2 y^2
///   4: y + a02 y^2 + y^3 + x^2 y^2
BPoly family_poly(const Family& f);

struct Verdict {
    enum class Tag { NotSubmersion, SubmersionAllConnected, SubmersionDisconnected, Undetermined };
    Tag tag;
    std::optional<WitnessBox> witness;           // NotSubmersion
    ConnRule rule = ConnRule::None;              // SubmersionAllConnected
    std::optional<Family> family;                // SubmersionDisconnected
    std::string hrc_description;                 // SubmersionDisconnected
    std::optional<QuarticLabel> case_label;      // Undetermined, degree-4 inputs
    std::string note;
};

/// Classifies the degree-4 homogeneous part by the multiplicities and
/// reality of its projective roots (square-free decomposition plus real-root
/// counting; the pattern is invariant under linear changes of variables).
QuarticCase quartic_case(const BPoly& p);

/// Full pipeline for nonconstant p of total degree <= 4: critical-point
/// oracle, connectedness rules, canonical family matching.
Verdict classify_degree4(const BPoly& p);

/// Matches p against the four canonical forms up to variable swap, rational
/// variable scalings, rational translations and rational scaling/shift of
/// the value. Transformations needing irrational radicals are not searched.
std::optional<Family> canonical_family_match(const BPoly& p);

/// Two exact points on the zero level of the family polynomial lying on
/// different components, plus a verified separator: p has no zero on the
/// open segment between them.
struct DisconnectionCertificate {
    std::pair<Rat, Rat> point_a;
    std::pair<Rat, Rat> point_b;
    std::string separator;
};

DisconnectionCertificate disconnection_certificate(const Family& f);

/// Re-verifies a disconnection certificate from its data alone.
bool verify_disconnection_certificate(const Family& f, const DisconnectionCertificate& cert);

}  // namespace rjc
