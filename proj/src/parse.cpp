#include "alextor/parse.hpp"

#include "alextor/errors.hpp"

#include <cctype>
#include <string>

namespace alextor {

namespace {

class Parser {
public:
    Parser(std::string_view text, unsigned order, bool allow_t)
        : text_(text), order_(order), allow_t_(allow_t) {}

    RatFunc run()
    {
        RatFunc v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("cannot parse \"" + std::string(text_) + "\" at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor()
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 't' || c == '(';
    }

    RatFunc expr()
    {
        RatFunc v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v += term();
            } else if (c == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    RatFunc term()
    {
        RatFunc v = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v *= unary();
            } else if (c == '/') {
                ++pos_;
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else if (starts_factor()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    RatFunc unary()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFunc power()
    {
        RatFunc base = atom();
        if (peek() != '^') return base;
        ++pos_;
        bool negative = false;
        char c = peek();
        if (c == '-' || c == '+') {
            negative = c == '-';
            ++pos_;
        }
        bool paren = peek() == '(';
        if (paren) {
            ++pos_;
            c = peek();
            if (c == '-' || c == '+') {
                negative = negative != (c == '-');
                ++pos_;
            }
        }
        long e = integer();
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        if (negative) {
            if (base.is_zero()) fail("zero to a negative power");
            base = base.inverse();
        }
        RatFunc out(1L);
        while (e > 0) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return out;
    }

    long integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    RatFunc atom()
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact; use a fraction");
            Integer v(std::string(text_.substr(start, pos_ - start)));
            return RatFunc(CycloNumber(Rational(v)));
        }
        if (c == 'z') {
            ++pos_;
            if (order_ < 1) fail("'z' used without a cyclotomic order");
            return RatFunc(CycloNumber::zeta(order_));
        }
        if (c == 't') {
            if (!allow_t_) fail("'t' is not allowed in a scalar");
            ++pos_;
            return RatFunc(LaurentPoly::t());
        }
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    unsigned order_;
    bool allow_t_;
    std::size_t pos_ = 0;
};

} // namespace

CycloNumber parse_cyclo(std::string_view text, unsigned order)
{
    RatFunc v = Parser(text, order, false).run();
    return v.num().coeff(0);
}

LaurentPoly parse_laurent(std::string_view text, unsigned order)
{
    RatFunc v = Parser(text, order, true).run();
    if (!v.is_laurent()) throw InputError("\"" + std::string(text) + "\" is not a Laurent polynomial");
    return v.num();
}

RatFunc parse_ratfunc(std::string_view text, unsigned order)
{
    return Parser(text, order, true).run();
}

} // namespace alextor
