#pragma once

#include <map>
#include <sstream>
#include <string>

#include "cherednik/rat.hpp"

namespace cherednik {

// One-variable Laurent polynomial: finite map exponent -> nonzero rational.
class Laurent1 {
public:
    using TermMap = std::map<long, Rat>;

    Laurent1() = default;

    static Laurent1 monomial(long exp, const Rat& c = Rat(1)) {
        Laurent1 f;
        f.add_term(exp, c);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(long exp, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent1& operator+=(const Laurent1& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent1& operator-=(const Laurent1& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
    friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }

    Laurent1 scaled(const Rat& c) const {
        Laurent1 r;
        if (c == 0) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    // Multiplication by z^k, k of either sign.
    Laurent1 shifted(long k) const {
        Laurent1 r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
        return r;
    }

    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
        Laurent1 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const Laurent1& o) const { return terms_ == o.terms_; }

    std::string to_string(const std::string& var = "z") const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Highest exponent first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool negative = c < 0;
            const Rat mag = negative ? Rat(-c) : c;
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                out << rat_to_string(mag);
            } else {
                if (mag != 1) out << rat_to_string(mag) << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    TermMap terms_;
};

}  // namespace cherednik
