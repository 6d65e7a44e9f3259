#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "cherednik/multipoly.hpp"

namespace cherednik {

struct ParseError : PolyError {
    ParseError(const std::string& what, std::size_t position)
        : PolyError(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// Recursive-descent parser for the polynomial expression grammar:
// integers, rationals a/b, named variables, + - * ^ ( ). Multiplication is
// always explicit. parse(print(p)) is the identity on canonical form.
class PolyParser {
public:
    PolyParser(std::string src, std::vector<std::string> vars)
        : src_(std::move(src)), vars_(std::move(vars)) {}

    MultiPoly parse() {
        pos_ = 0;
        MultiPoly p = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    MultiPoly parse_sum() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        MultiPoly acc = parse_product();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_product();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_product() {
        MultiPoly acc = parse_power();
        while (true) {
            skip_ws();
            if (peek() != '*') return acc;
            ++pos_;
            acc *= parse_power();
        }
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("exponent must be a non-negative integer", at);
        long e = std::stol(read_digits());
        return base.pow(static_cast<int>(e));
    }

    MultiPoly parse_atom() {
        skip_ws();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_sum();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(read_digits());
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t dpos = pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected denominator digits", dpos);
                Int den(read_digits());
                if (den == 0) throw ParseError("zero denominator", dpos);
                return MultiPoly::constant(vars_.size(), Rat(num, den));
            }
            return MultiPoly::constant(vars_.size(), Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size()) {
                const char v = src_[pos_];
                if (!std::isalnum(static_cast<unsigned char>(v)) && v != '_') break;
                name += v;
                ++pos_;
            }
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return MultiPoly::variable(vars_.size(), i);
            throw ParseError("unknown variable '" + name + "'", at);
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            out += src_[pos_++];
        return out;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string src_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

inline MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& vars) {
    return PolyParser(src, vars).parse();
}

}  // namespace cherednik
