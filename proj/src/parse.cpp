#include "rjc/parse.hpp"

#include <cctype>

namespace rjc {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    BPoly parse() {
        BPoly r = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    BPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        BPoly r = term();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            BPoly t = term();
            r = (c == '+') ? r + t : r - t;
        }
        return r;
    }

    BPoly term() {
        BPoly r = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            get();
            r = r * factor();
        }
        return r;
    }

    BPoly factor() {
        BPoly b = base();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(peek())) fail("expected a nonnegative integer exponent");
            long e = integer();
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    BPoly base() {
        skip_ws();
        char c = peek();
        if (c == 'x' || c == 'y') {
            get();
            reject_implicit();
            return BPoly::variable(c == 'x' ? Var::x : Var::y);
        }
        if (c == '(') {
            get();
            BPoly r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            reject_implicit();
            return r;
        }
        if (std::isdigit(c) || c == '-') return BPoly(rational());
        fail("expected a rational, 'x', 'y' or '('");
        return {};
    }

    Rat rational() {
        bool neg = false;
        if (peek() == '-') {
            get();
            skip_ws();
        }
        if (!std::isdigit(peek())) fail("expected digits");
        Int num = digits();
        if (neg) num = -num;
        reject_implicit();
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            if (!std::isdigit(peek())) fail("expected a positive denominator");
            int col = static_cast<int>(pos_) + 1;
            Int den = digits();
            if (den == 0) throw ParseError("denominator must be positive", col);
            reject_implicit();
            return Rat(num, den);
        }
        return Rat(num);
    }

    long integer() {
        Int v = digits();
        if (!v.fits_slong_p()) fail("exponent too large");
        reject_implicit();
        return v.get_si();
    }

    Int digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return Int(d);
    }

    void reject_implicit() {
        // a variable, digit or '(' directly after a complete token means
        // implicit multiplication
        if (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
                fail("implicit multiplication is not allowed");
        }
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, static_cast<int>(pos_) + 1);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

BPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

std::string print_poly(const BPoly& p) { return p.to_string(); }

}  // namespace rjc
