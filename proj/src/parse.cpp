#include "qla/parse.hpp"

#include "qla/error.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <tuple>

namespace qla {
namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    bool starts_atom() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'v' || c == '(';
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else if (starts_atom()) {
                r *= power();  // implicit product, e.g. "2q"
            } else {
                return r;
            }
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer literal too long");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    // Exponent in units of 1/2 (so q^e maps to v^(2e)); returns (numerator, denominator).
    std::pair<long, long> exponent() {
        if (accept('(')) {
            long sign = accept('-') ? -1 : 1;
            long n = sign * integer();
            long d = 1;
            if (accept('/')) d = integer();
            if (d == 0) fail("zero exponent denominator");
            if (!accept(')')) fail("expected ')'");
            return {n, d};
        }
        long sign = accept('-') ? -1 : 1;
        return {sign * integer(), 1};
    }

    RatFunc power() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'q' || c == 'v') {
            ++pos_;
            long n = 1, d = 1;
            if (accept('^')) std::tie(n, d) = exponent();
            // v-exponent = (c == 'q' ? 2 : 1) * n / d
            const long scale = (c == 'q') ? 2 : 1;
            if ((scale * n) % d != 0) fail("exponent not representable as a power of v");
            return RatFunc::v_pow(static_cast<int>(scale * n / d));
        }
        RatFunc base;
        if (accept('(')) {
            base = expr();
            if (!accept(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = RatFunc(integer());
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (accept('^')) {
            auto [n, d] = exponent();
            if (d != 1) fail("fractional exponent on a non-variable base");
            RatFunc r(1);
            for (long k = 0; k < std::labs(n); ++k) r *= base;
            if (n < 0) {
                if (r.is_zero()) fail("zero raised to a negative power");
                r = r.inverse();
            }
            return r;
        }
        return base;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace qla
