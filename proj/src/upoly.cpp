#include "rjc/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace rjc {

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: '" + s + "'");
    }
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1);
    mpq_class base = q_;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return Rat(r);
}

std::string Rat::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

UPoly UPoly::monomial(const Rat& c, int exp) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(exp + 1, Rat(0));
    p.c_[exp] = c;
    return p;
}

int UPoly::deg() const {
    if (c_.empty()) throw ZeroPolynomial();
    return static_cast<int>(c_.size()) - 1;
}

Rat UPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return UPoly(std::move(d));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly operator*(const Rat& s, const UPoly& p) {
    if (s.is_zero()) return UPoly();
    UPoly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly operator/(const UPoly& p, const Rat& s) { return s.inverse() * p; }

UPoly UPoly::pow(int e) const {
    UPoly r(Rat(1));
    UPoly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw ZeroPolynomial();
    UPoly rem = num;
    int dd = den.deg();
    Rat inv_lc = den.lc().inverse();
    if (rem.is_zero() || rem.deg() < dd) return {UPoly(), rem};
    std::vector<Rat> q(rem.deg() - dd + 1, Rat(0));
    while (!rem.is_zero() && rem.deg() >= dd) {
        int k = rem.deg() - dd;
        Rat f = rem.lc() * inv_lc;
        q[k] = f;
        rem = rem - UPoly::monomial(f, k) * den;
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::exact_div(const UPoly& num, const UPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw Error("exact_div: division left a remainder");
    return q;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this / lc();
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly u = a, v = b;
    while (!v.is_zero()) {
        UPoly r = divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) throw ZeroPolynomial();
    if (deg() == 0) return UPoly(Rat(1));
    UPoly g = gcd(*this, derivative());
    return exact_div(*this, g).monic();
}

Rat UPoly::root_bound() const {
    if (is_zero()) throw ZeroPolynomial();
    Rat m(0);
    Rat inv = lc().inverse().abs();
    for (size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, c_[i].abs() * inv);
    return Rat(1) + m;
}

UPoly UPoly::compose_linear(const Rat& s, const Rat& t) const {
    // Horner: p(s x + t)
    UPoly arg = UPoly::monomial(s, 1) + UPoly(t);
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * arg + UPoly(*it);
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.to_string();
        } else {
            if (a != Rat(1)) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rjc
