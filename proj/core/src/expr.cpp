#include "fusion/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "fusion/errors.hpp"

namespace fusion {

double quantumInteger(long n, long m) {
    if (m < 2 || n < 1 || n >= m)
        throw InputError("quantumInteger: need 1 <= n < m, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
    return std::sin(n * std::numbers::pi / m) / std::sin(std::numbers::pi / m);
}

namespace {

using C = std::complex<double>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    C parse() {
        C v = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("expression \"" + s_ + "\" at offset " + std::to_string(p_) + ": " + why);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    C expr() {
        C v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    C term() {
        C v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                C d = unary();
                if (d == C(0)) fail("division by zero");
                v /= d;
            } else return v;
        }
    }
    C unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    C power() {
        C base = primary();
        if (eat('^')) {
            C e = unary();
            if (e.imag() == 0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 64) {
                long k = std::lround(e.real());
                C r = 1;
                C b = k < 0 ? C(1) / base : base;
                for (long i = 0; i < std::labs(k); ++i) r *= b;
                return r;
            }
            return std::pow(base, e);
        }
        return base;
    }
    long integerArg() {
        C v = expr();
        if (v.imag() != 0 || v.real() != std::round(v.real())) fail("integer argument expected");
        return std::lround(v.real());
    }
    C primary() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end");
        char c = s_[p_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            double v = std::stod(s_.substr(p_), &used);
            p_ += used;
            return v;
        }
        if (eat('(')) {
            C v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t b = p_;
            while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
            std::string id = s_.substr(b, p_ - b);
            if (id == "i") return C(0, 1);
            if (id == "pi") return std::numbers::pi;
            expect('(');
            C out;
            if (id == "zeta") {
                long n = integerArg();
                expect(',');
                long k = integerArg();
                if (n <= 0) fail("zeta order must be positive");
                k %= n;
                if (k < 0) k += n;
                double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
                // Exact values at the quarter points keep integer combinations exact.
                if (4 * k % n == 0) {
                    static const C quarter[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
                    out = quarter[4 * k / n];
                } else {
                    out = C(std::cos(a), std::sin(a));
                }
            } else if (id == "qint") {
                long n = integerArg();
                expect(',');
                long m = integerArg();
                out = quantumInteger(n, m);
            } else {
                C x = expr();
                if (id == "sqrt") out = std::sqrt(x);
                else if (id == "sin") out = std::sin(x);
                else if (id == "cos") out = std::cos(x);
                else if (id == "csc") out = C(1) / std::sin(x);
                else if (id == "sec") out = C(1) / std::cos(x);
                else fail("unknown function '" + id + "'");
            }
            expect(')');
            return out;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

std::complex<double> evalExpression(const std::string& text) { return Parser(text).parse(); }

}  // namespace fusion
