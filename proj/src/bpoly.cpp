#include "rjc/bpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rjc {

void BPoly::add_term(int i, int j, const Rat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BPoly BPoly::monomial(const Rat& c, int i, int j) {
    BPoly p;
    if (!c.is_zero()) p.t_[{i, j}] = c;
    return p;
}

BPoly BPoly::from_upoly(const UPoly& u, Var v) {
    BPoly p;
    for (int k = 0; k < static_cast<int>(u.coeffs().size()); ++k) {
        const Rat& c = u.coeffs()[k];
        if (c.is_zero()) continue;
        p.t_[v == Var::x ? std::make_pair(k, 0) : std::make_pair(0, k)] = c;
    }
    return p;
}

BPoly BPoly::from_coeffs(const std::vector<UPoly>& coeffs, Var v) {
    BPoly p;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        p = p + from_upoly(coeffs[k], other(v)) * variable(v).pow(k);
    return p;
}

std::optional<int> BPoly::total_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [ij, c] : t_) d = std::max(d, ij.first + ij.second);
    return d;
}

std::optional<int> BPoly::degree_in(Var v) const {
    if (t_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [ij, c] : t_) d = std::max(d, v == Var::x ? ij.first : ij.second);
    return d;
}

Rat BPoly::eval(const Rat& x0, const Rat& y0) const {
    Rat r(0);
    for (const auto& [ij, c] : t_) r += c * x0.pow(ij.first) * y0.pow(ij.second);
    return r;
}

UPoly BPoly::eval_partial(Var v, const Rat& v0) const {
    std::vector<Rat> acc;
    for (const auto& [ij, c] : t_) {
        int fixed = v == Var::x ? ij.first : ij.second;
        int keep = v == Var::x ? ij.second : ij.first;
        if (keep >= static_cast<int>(acc.size())) acc.resize(keep + 1, Rat(0));
        acc[keep] += c * v0.pow(fixed);
    }
    return UPoly(std::move(acc));
}

BPoly BPoly::derivative(Var v) const {
    BPoly r;
    for (const auto& [ij, c] : t_) {
        int e = v == Var::x ? ij.first : ij.second;
        if (e == 0) continue;
        if (v == Var::x)
            r.add_term(ij.first - 1, ij.second, Rat(static_cast<long>(e)) * c);
        else
            r.add_term(ij.first, ij.second - 1, Rat(static_cast<long>(e)) * c);
    }
    return r;
}

std::vector<UPoly> BPoly::coeffs_in(Var v) const {
    auto d = degree_in(v);
    if (!d) return {};
    std::vector<std::vector<Rat>> rows(*d + 1);
    for (const auto& [ij, c] : t_) {
        int k = v == Var::x ? ij.first : ij.second;
        int o = v == Var::x ? ij.second : ij.first;
        if (o >= static_cast<int>(rows[k].size())) rows[k].resize(o + 1, Rat(0));
        rows[k][o] += c;
    }
    std::vector<UPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

BPoly BPoly::homogeneous_part(int d) const {
    BPoly r;
    for (const auto& [ij, c] : t_)
        if (ij.first + ij.second == d) r.t_[ij] = c;
    return r;
}

BPoly BPoly::swap_vars() const {
    BPoly r;
    for (const auto& [ij, c] : t_) r.t_[{ij.second, ij.first}] = c;
    return r;
}

UPoly BPoly::as_upoly(Var v) const {
    if (degree_in(other(v)).value_or(0) != 0)
        throw Error("as_upoly: polynomial depends on the other variable");
    std::vector<Rat> c;
    for (const auto& [ij, coef] : t_) {
        int e = v == Var::x ? ij.first : ij.second;
        if (e >= static_cast<int>(c.size())) c.resize(e + 1, Rat(0));
        c[e] = coef;
    }
    return UPoly(std::move(c));
}

BPoly BPoly::operator-() const {
    BPoly r = *this;
    for (auto& [ij, c] : r.t_) c = -c;
    return r;
}

BPoly operator+(const BPoly& a, const BPoly& b) {
    BPoly r = a;
    for (const auto& [ij, c] : b.t_) r.add_term(ij.first, ij.second, c);
    return r;
}

BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }

BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly r;
    for (const auto& [ij, c] : a.t_)
        for (const auto& [kl, d] : b.t_)
            r.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
    return r;
}

BPoly operator*(const Rat& s, const BPoly& p) {
    BPoly r;
    if (s.is_zero()) return r;
    for (const auto& [ij, c] : p.t_) r.t_[ij] = s * c;
    return r;
}

BPoly BPoly::pow(int e) const {
    BPoly r(Rat(1));
    BPoly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

std::string BPoly::to_string() const {
    if (t_.empty()) return "0";
    std::vector<Term> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        int da = a.first.first + a.first.second;
        int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : terms) {
        Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        auto [i, j] = ij;
        bool has_var = i > 0 || j > 0;
        if (!has_var) {
            os << a.to_string();
            continue;
        }
        bool coeff_shown = a != Rat(1);
        if (coeff_shown) os << a.to_string();
        bool need_star = coeff_shown;
        if (i > 0) {
            if (need_star) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
            need_star = true;
        }
        if (j > 0) {
            if (need_star) os << "*";
            os << "y";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

AffineMap::AffineMap(Rat a_, Rat b_, Rat c_, Rat d_, Rat e_, Rat f_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)), f(std::move(f_)) {
    if ((a * d - b * c).is_zero()) throw SingularMap();
}

AffineMap AffineMap::inverse() const {
    Rat det = a * d - b * c;
    Rat ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
    // translation of the inverse: -A^{-1} (e, f)
    Rat ie = -(ia * e + ib * f);
    Rat iff = -(ic * e + id * f);
    return AffineMap(ia, ib, ic, id, ie, iff);
}

std::pair<Rat, Rat> AffineMap::apply(const Rat& x, const Rat& y) const {
    return {a * x + b * y + e, c * x + d * y + f};
}

BPoly affine_substitute(const BPoly& p, const AffineMap& T) {
    BPoly gx = BPoly::monomial(T.a, 1, 0) + BPoly::monomial(T.b, 0, 1) + BPoly(T.e);
    BPoly gy = BPoly::monomial(T.c, 1, 0) + BPoly::monomial(T.d, 0, 1) + BPoly(T.f);
    // cache powers up to the needed degree
    auto dx = p.degree_in(Var::x).value_or(0);
    auto dy = p.degree_in(Var::y).value_or(0);
    std::vector<BPoly> px(dx + 1), py(dy + 1);
    px[0] = BPoly(1);
    for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * gx;
    py[0] = BPoly(1);
    for (int j = 1; j <= dy; ++j) py[j] = py[j - 1] * gy;
    BPoly r;
    for (const auto& [ij, c] : p.terms()) r = r + c * (px[ij.first] * py[ij.second]);
    return r;
}

AffineEquivalence::AffineEquivalence(AffineMap T, Rat M, Rat N)
    : map(std::move(T)), scale(std::move(M)), shift(std::move(N)) {
    if (scale.is_zero()) throw PreconditionFailed("equivalence scale M must be nonzero");
}

}  // namespace rjc
