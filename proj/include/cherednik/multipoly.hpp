#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/rat.hpp"

namespace cherednik {

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by divide_exact when the divisor does not divide the dividend in the
// polynomial ring. Dunkl operators use this as their well-definedness signal.
struct NonExactDivision : PolyError {
    using PolyError::PolyError;
};

// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// Graded lexicographic, descending: leading term first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// Multivariate polynomial with exact rational coefficients. Zero coefficients
// are never stored; term order is graded lex with the leading term first.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    explicit MultiPoly(std::size_t dim = 1) : dim_(dim) {}

    static MultiPoly zero(std::size_t dim) { return MultiPoly(dim); }

    static MultiPoly constant(std::size_t dim, const Rat& c) {
        MultiPoly p(dim);
        p.add_term(Monomial(dim, 0), c);
        return p;
    }

    static MultiPoly variable(std::size_t dim, std::size_t index) {
        if (index >= dim) throw PolyError("variable index out of range");
        MultiPoly p(dim);
        Monomial m(dim, 0);
        m[index] = 1;
        p.add_term(m, Rat(1));
        return p;
    }

    // Linear form sum_i coeffs[i] * x_i.
    static MultiPoly linear_form(const RatVec& coeffs) {
        MultiPoly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Monomial m(coeffs.size(), 0);
            m[i] = 1;
            p.add_term(m, coeffs[i]);
        }
        return p;
    }

    std::size_t dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
    }

    Rat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (m.size() != dim_) throw PolyError("monomial dimension mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly r(dim_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_dim(b);
        MultiPoly r(a.dim_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.dim_);
                for (std::size_t i = 0; i < a.dim_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rat& c) const {
        MultiPoly r(dim_);
        if (c == 0) return r;
        for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw PolyError("negative exponent");
        MultiPoly r = constant(dim_, Rat(1));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    MultiPoly partial_derivative(std::size_t var) const {
        if (var >= dim_) throw PolyError("partial_derivative: index out of range");
        MultiPoly r(dim_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            --d[var];
            r.add_term(d, c * m[var]);
        }
        return r;
    }

    // Substitutes x_i -> images[i].
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (images.size() != dim_) throw PolyError("substitute: wrong image count");
        const std::size_t out_dim = images.empty() ? dim_ : images[0].dim();
        MultiPoly r(out_dim);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = MultiPoly::constant(out_dim, c);
            for (std::size_t i = 0; i < dim_; ++i)
                if (m[i] > 0) t *= images[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    // Composition with the linear change of variables x -> M^T x, so that
    // substitute_linear(p, M1*M2) == substitute_linear(substitute_linear(p, M2), M1).
    MultiPoly substitute_linear(const RatMatrix& m) const {
        if (m.size() != dim_) throw PolyError("substitute_linear: shape mismatch");
        // Signed permutation matrices (every Weyl element of types A-D) act by
        // permuting exponents with a sign; skip the general expansion there.
        std::vector<int> target(dim_);
        std::vector<Rat> sign(dim_);
        bool signed_perm = true;
        for (std::size_t i = 0; i < dim_ && signed_perm; ++i) {
            int found = -1;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Rat& v = m(j, i);
                if (v == 0) continue;
                if (found >= 0 || (v != 1 && v != -1)) {
                    signed_perm = false;
                    break;
                }
                found = static_cast<int>(j);
                sign[i] = v;
            }
            if (found < 0) signed_perm = false;
            target[i] = found;
        }
        if (signed_perm) {
            MultiPoly r(dim_);
            for (const auto& [mono, c] : terms_) {
                Monomial img(dim_, 0);
                Rat coeff = c;
                for (std::size_t i = 0; i < dim_; ++i) {
                    if (mono[i] == 0) continue;
                    img[target[i]] += mono[i];
                    if (sign[i] < 0 && (mono[i] & 1)) coeff = -coeff;
                }
                r.add_term(img, coeff);
            }
            return r;
        }
        std::vector<MultiPoly> images;
        images.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            RatVec col(dim_);
            for (std::size_t j = 0; j < dim_; ++j) col[j] = m(j, i);
            images.push_back(linear_form(col));
        }
        return substitute(images);
    }

    Rat evaluate(const RatVec& point) const {
        if (point.size() != dim_) throw PolyError("evaluate: wrong point size");
        Rat total(0);
        for (const auto& [m, c] : terms_) {
            Rat v = c;
            for (std::size_t i = 0; i < dim_; ++i)
                for (int e = 0; e < m[i]; ++e) v *= point[i];
            total += v;
        }
        return total;
    }

    MultiPoly homogeneous_component(int d) const {
        MultiPoly r(dim_);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    std::string to_string(const std::vector<std::string>& vars) const {
        if (vars.size() != dim_) throw PolyError("to_string: wrong variable count");
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const Rat mag = negative ? Rat(-c) : c;
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            first = false;
            std::vector<std::string> factors;
            if (mag != 1 || total_degree(m) == 0) factors.push_back(rat_to_string(mag));
            for (std::size_t i = 0; i < dim_; ++i) {
                if (m[i] == 0) continue;
                factors.push_back(m[i] == 1 ? vars[i]
                                            : vars[i] + "^" + std::to_string(m[i]));
            }
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << "*";
                out << factors[i];
            }
        }
        return out.str();
    }

private:
    void check_dim(const MultiPoly& o) const {
        if (dim_ != o.dim_) throw PolyError("polynomial dimension mismatch");
    }

    std::size_t dim_;
    TermMap terms_;
};

// Exact quotient p/q. Long division against the single divisor with grlex
// leading terms; any step where the leading term is not divisible means q
// does not divide p.
inline MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (p.dim() != q.dim()) throw PolyError("divide_exact: dimension mismatch");
    if (q.is_zero()) throw NonExactDivision("divide_exact: division by zero");
    MultiPoly quotient(p.dim());
    MultiPoly rem = p;
    const auto& [lead_mono, lead_coeff] = *q.terms().begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        Monomial ratio(rem.dim());
        for (std::size_t i = 0; i < rem.dim(); ++i) {
            ratio[i] = rm[i] - lead_mono[i];
            if (ratio[i] < 0) throw NonExactDivision("divide_exact: non-exact division");
        }
        const Rat c = rc / lead_coeff;
        quotient.add_term(ratio, c);
        MultiPoly t(rem.dim());
        t.add_term(ratio, c);
        rem -= t * q;
    }
    return quotient;
}

// Total-degree Euler operator: eu(f) = sum_i x_i d/dx_i f, acting as
// multiplication by d on the homogeneous degree-d piece.
inline MultiPoly euler_apply(const MultiPoly& f) {
    MultiPoly r(f.dim());
    for (const auto& [m, c] : f.terms()) r.add_term(m, c * total_degree(m));
    return r;
}

}  // namespace cherednik
