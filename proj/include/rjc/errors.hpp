#pragma once

#include <stdexcept>
#include <string>

namespace rjc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DenominatorZero : Error {
    DenominatorZero() : Error("denominator is zero") {}
    explicit DenominatorZero(const std::string& m) : Error(m) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct EndpointIsRoot : Error {
    EndpointIsRoot() : Error("interval endpoint is a root") {}
};

struct KOutOfRange : Error {
    KOutOfRange() : Error("subresultant index k out of range") {}
};

struct BothConstantInVar : Error {
    BothConstantInVar() : Error("both polynomials are constant in the elimination variable") {}
};

struct ZeroLeadingCoefficient : Error {
    ZeroLeadingCoefficient() : Error("leading coefficient is zero") {}
};

struct AlphaNotCommonZero : Error {
    AlphaNotCommonZero() : Error("supplied alpha is not a common zero of R0 and M") {}
};

struct DegreeTooHigh : Error {
    explicit DegreeTooHigh(const std::string& m) : Error(m) {}
};

struct LeadingCoeffVanishesOnStrip : Error {
    LeadingCoeffVanishesOnStrip() : Error("leading coefficient vanishes on the strip") {}
};

struct DegreeNotFour : Error {
    DegreeNotFour() : Error("total degree is not four") {}
};

struct QuarticPartZero : Error {
    QuarticPartZero() : Error("degree-4 homogeneous part is zero") {}
};

struct ConstantInput : Error {
    ConstantInput() : Error("input polynomial is constant") {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& m) : Error(m) {}
};

struct BadIndices : Error {
    BadIndices() : Error("indices must satisfy 1 <= j <= k") {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct LemmaViolation : Error {
    explicit LemmaViolation(const std::string& m) : Error(m) {}
};

struct BadLength : Error {
    explicit BadLength(const std::string& m) : Error(m) {}
};

struct SingularMap : Error {
    SingularMap() : Error("affine map is singular (ad - bc = 0)") {}
};

/// Raised on inputs outside the decision procedures' supported range
/// (e.g. an even-degree gcd of order >= 4 at an irrational elimination root).
struct Unsupported : Error {
    explicit Unsupported(const std::string& m) : Error(m) {}
};

struct ParseError : Error {
    int column;  // 1-based
    ParseError(const std::string& m, int col)
        : Error(m + " (column " + std::to_string(col) + ")"), column(col) {}
};

}  // namespace rjc
