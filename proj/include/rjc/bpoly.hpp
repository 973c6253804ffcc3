#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rjc/rat.hpp"
#include "rjc/upoly.hpp"

namespace rjc {

enum class Var { x, y };

inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }
inline const char* name(Var v) { return v == Var::x ? "x" : "y"; }

/// Sparse bivariate polynomial over Rat: finite map (i, j) -> coefficient
/// of x^i y^j. Normalized: no stored zero coefficients.
class BPoly {
  public:
    using Term = std::pair<std::pair<int, int>, Rat>;

    BPoly() = default;
    BPoly(const Rat& c) { if (!c.is_zero()) t_[{0, 0}] = c; }
    BPoly(int c) : BPoly(Rat(c)) {}

    static BPoly monomial(const Rat& c, int i, int j);
    static BPoly variable(Var v) { return monomial(1, v == Var::x ? 1 : 0, v == Var::x ? 0 : 1); }
    /// Lift a univariate polynomial into the given variable.
    static BPoly from_upoly(const UPoly& u, Var v);
    /// Reassemble from coefficients with respect to `v`: sum coeffs[k] * v^k.
    static BPoly from_coeffs(const std::vector<UPoly>& coeffs, Var v);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == std::make_pair(0, 0)); }

    std::optional<int> total_degree() const;
    /// Degree in one variable; empty for the zero polynomial.
    std::optional<int> degree_in(Var v) const;

    Rat coeff(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Rat(0) : it->second;
    }
    const std::map<std::pair<int, int>, Rat>& terms() const { return t_; }

    Rat eval(const Rat& x0, const Rat& y0) const;
    /// Specialize one variable to a rational; the result is univariate in the other.
    UPoly eval_partial(Var v, const Rat& v0) const;

    BPoly derivative(Var v) const;

    /// Coefficients as univariate polynomials in the other variable:
    /// p = sum_k result[k] * v^k. Empty for the zero polynomial.
    std::vector<UPoly> coeffs_in(Var v) const;

    /// Sum of the terms of total degree d.
    BPoly homogeneous_part(int d) const;

    /// Swap the roles of x and y.
    BPoly swap_vars() const;

    /// View as univariate in v; requires degree 0 in the other variable.
    UPoly as_upoly(Var v) const;

    BPoly operator-() const;
    friend BPoly operator+(const BPoly& a, const BPoly& b);
    friend BPoly operator-(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const Rat& s, const BPoly& p);
    friend BPoly operator*(const BPoly& p, const Rat& s) { return s * p; }
    BPoly pow(int e) const;

    friend bool operator==(const BPoly& a, const BPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

    /// Canonical text: terms ordered by (total degree, x-exponent) descending.
    std::string to_string() const;

  private:
    void add_term(int i, int j, const Rat& c);
    std::map<std::pair<int, int>, Rat> t_;
    friend class AffineMap;
};

/// Invertible affine change of coordinates
/// (x, y) -> (a x + b y + e, c x + d y + f), ad - bc != 0.
class AffineMap {
  public:
    AffineMap(Rat a, Rat b, Rat c, Rat d, Rat e, Rat f);
    static AffineMap identity() { return AffineMap(1, 0, 0, 1, 0, 0); }
    static AffineMap linear(Rat a, Rat b, Rat c, Rat d) { return AffineMap(a, b, c, d, 0, 0); }
    static AffineMap translation(Rat e, Rat f) { return AffineMap(1, 0, 0, 1, e, f); }

    AffineMap inverse() const;
    std::pair<Rat, Rat> apply(const Rat& x, const Rat& y) const;

    Rat a, b, c, d, e, f;
};

/// p composed with T: substitute x -> a x + b y + e, y -> c x + d y + f.
BPoly affine_substitute(const BPoly& p, const AffineMap& T);

/// Equivalence data p = M * (q composed with T^-1) + N, M != 0.
struct AffineEquivalence {
    AffineMap map;
    Rat scale;  // M
    Rat shift;  // N
    AffineEquivalence(AffineMap T, Rat M, Rat N);
};

}  // namespace rjc
