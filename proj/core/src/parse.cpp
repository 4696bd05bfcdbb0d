#include "cyclodyn/parse.hpp"

#include <cctype>
#include <climits>

#include "cyclodyn/errors.hpp"

namespace cyclodyn {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    CycloNum parse() {
        CycloNum v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Integer integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    long small_integer() {
        const std::size_t at = pos_;
        Integer v = integer();
        if (!v.fits_slong_p()) {
            pos_ = at;
            fail("integer too large");
        }
        return v.get_si();
    }

    CycloNum expr() {
        CycloNum v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    CycloNum term() {
        CycloNum v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                CycloNum d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycloNum unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    CycloNum power() {
        CycloNum base = primary();
        if (!accept('^')) return base;
        bool neg = false;
        if (accept('-')) neg = true;
        const long e = small_integer();
        if (neg && base.is_zero()) fail("zero to a negative power");
        CycloNum r = base.pow(static_cast<unsigned long>(e));
        return neg ? r.inverse() : r;
    }

    CycloNum primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            CycloNum v = expr();
            expect(')');
            return v;
        }
        if (c == 'z') {
            ++pos_;
            expect('(');
            const std::size_t at = pos_;
            const long n = small_integer();
            if (n < 1 || n > 100000) {
                pos_ = at;
                fail("root of unity order out of range");
            }
            expect(')');
            return CycloNum::zeta(static_cast<unsigned>(n), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return CycloNum(integer());
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_element(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const CycloNum& a_in) {
    const CycloNum a = canonicalize_conductor(a_in);
    if (a.is_rational()) return to_string(a.rational_value());
    std::string out;
    const std::string z = "z(" + std::to_string(a.conductor()) + ")";
    for (std::size_t j = 0; j < a.coords().size(); ++j) {
        Rational c = a.coords()[j];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (j == 0) {
            out += to_string(c);
            continue;
        }
        if (c != 1) out += to_string(c) + "*";
        out += z;
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

std::string to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const CycloNum& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!(c == CycloNum(1L))) out += "(" + cs + ")*";
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace cyclodyn
