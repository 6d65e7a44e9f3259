#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace cherednik {

// Exact rational scalar. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form we need everywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return Rat(num, den);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline bool is_half_integer(const Rat& r) { return denominator(r) == 2; }

inline Int floor_int(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

// Parses "a" or "a/b" with optional leading sign. Returns nullopt on junk.
inline std::optional<Rat> parse_rat(const std::string& text) {
    try {
        std::size_t slash = text.find('/');
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace cherednik
