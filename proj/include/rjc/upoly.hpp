#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rjc/rat.hpp"

namespace rjc {

/// Dense univariate polynomial over Rat, indexed by exponent.
/// Normalized: the coefficient vector never ends in zeros; the zero
/// polynomial has an empty vector and no degree.
class UPoly {
  public:
    UPoly() = default;
    UPoly(const Rat& c) { if (!c.is_zero()) c_ = {c}; }
    UPoly(int c) : UPoly(Rat(c)) {}
    explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const Rat& c, int exp);
    static UPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree; empty for the zero polynomial.
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    int deg() const;

    /// Leading coefficient; 0 for the zero polynomial (total query).
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat coeff(int exp) const {
        if (exp < 0 || exp >= static_cast<int>(c_.size())) return Rat(0);
        return c_[exp];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& s, const UPoly& p);
    friend UPoly operator*(const UPoly& p, const Rat& s) { return s * p; }
    friend UPoly operator/(const UPoly& p, const Rat& s);
    UPoly pow(int e) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg rem < deg divisor. Throws ZeroPolynomial on zero divisor.
    static std::pair<UPoly, UPoly> divrem(const UPoly& num, const UPoly& den);

    /// Division known to be exact; throws Error if a remainder is left.
    static UPoly exact_div(const UPoly& num, const UPoly& den);

    UPoly monic() const;

    /// Monic gcd; gcd(0,0) = 0.
    static UPoly gcd(const UPoly& a, const UPoly& b);

    /// p / gcd(p, p'), monic: same distinct roots, all simple.
    UPoly squarefree_part() const;

    /// Cauchy bound: every real root lies in (-B, B), B = 1 + max |a_i / a_n|.
    Rat root_bound() const;

    /// Substitute x -> s*x + t (exact).
    UPoly compose_linear(const Rat& s, const Rat& t) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
    std::vector<Rat> c_;
};

}  // namespace rjc
