#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "rjc/errors.hpp"

namespace rjc {

using Int = mpz_class;

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1 and den > 0.
/// Wraps GMP's mpq_class, which does not canonicalize on construction.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) { q_ = Int(n); }
    Rat(const Int& n) : q_(n) {}
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw DenominatorZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "num" or "num/den" (den > 0 after canonicalization).
    static Rat from_string(const std::string& s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const {
        if (is_zero()) throw DenominatorZero("inverse of zero");
        return Rat(mpq_class(1) / q_);
    }
    Rat pow(long e) const;

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DenominatorZero("division by zero");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class q_;  // invariant: canonical
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace rjc
