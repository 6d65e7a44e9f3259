#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/multipoly.hpp"
#include "cherednik/root_system.hpp"

namespace cherednik {

// Multiplicity function in the reflection-orbit convention: one rational per
// hyperplane orbit. W-invariance is structural.
struct CMult {
    Rat c_short;  // the only value when there is a single orbit
    Rat c_long;

    const Rat& of_orbit(int orbit) const { return orbit == 0 ? c_short : c_long; }
};

// Parameter in the idempotent convention: per hyperplane orbit, the vector
// (kappa_0, ..., kappa_{l_H - 1}). Real groups have l_H = 2 throughout.
struct KappaParam {
    std::vector<RatVec> per_orbit;
};

// kappa = (0, -c) on each orbit.
inline KappaParam c_to_kappa(const RootSystem& rs, const CMult& c) {
    KappaParam k;
    for (int o = 0; o < rs.num_orbits; ++o)
        k.per_orbit.push_back({Rat(0), -c.of_orbit(o)});
    return k;
}

struct ConversionError : PolyError {
    using PolyError::PolyError;
};

inline CMult kappa_to_c(const RootSystem& rs, const KappaParam& k) {
    if (static_cast<int>(k.per_orbit.size()) != rs.num_orbits)
        throw ConversionError("kappa orbit count mismatch");
    CMult c{Rat(0), Rat(0)};
    for (int o = 0; o < rs.num_orbits; ++o) {
        const RatVec& v = k.per_orbit[o];
        if (v.size() != 2) throw ConversionError("real group needs kappa vectors of length 2");
        if (v[0] != 0)
            throw ConversionError("kappa with nonzero residue-0 entry has no c-image");
        (o == 0 ? c.c_short : c.c_long) = -v[1];
    }
    if (rs.num_orbits == 1) c.c_long = c.c_short;
    return c;
}

// Dunkl operators for a fixed (group, c) pair. Coordinate-direction actions
// on monomials are cached: the operators are linear, so everything else is
// bookkeeping over the cache.
class DunklContext {
public:
    DunklContext(const RootSystem& rs, const CMult& c) : rs_(rs), c_(c) {
        for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
            reflections_.push_back(reflection_matrix(rs, i));
            root_forms_.push_back(MultiPoly::linear_form(rs.positive_roots[i]));
        }
        cache_.resize(rs.dim);
    }

    const RootSystem& root_system() const { return rs_; }
    const CMult& c() const { return c_; }

    // T_y f = d_y f - sum over positive roots of c_alpha <alpha,y> (f - s.f)/alpha.
    MultiPoly apply(const RatVec& y, const MultiPoly& f) {
        if (y.size() != rs_.dim) throw PolyError("Dunkl direction dimension mismatch");
        MultiPoly total(rs_.dim);
        for (std::size_t i = 0; i < rs_.dim; ++i) {
            if (y[i] == 0) continue;
            total += apply_coordinate(i, f).scaled(y[i]);
        }
        return total;
    }

    MultiPoly apply_coordinate(std::size_t dir, const MultiPoly& f) {
        MultiPoly total(rs_.dim);
        for (const auto& [m, coeff] : f.terms())
            total += apply_to_monomial(dir, m).scaled(coeff);
        return total;
    }

private:
    const MultiPoly& apply_to_monomial(std::size_t dir, const Monomial& m) {
        auto it = cache_[dir].find(m);
        if (it != cache_[dir].end()) return it->second;
        MultiPoly f(rs_.dim);
        f.add_term(m, Rat(1));
        MultiPoly result = f.partial_derivative(dir);
        for (std::size_t r = 0; r < rs_.positive_roots.size(); ++r) {
            const Rat& c = c_.of_orbit(rs_.orbit_of_root[r]);
            if (c == 0) continue;
            const Rat pairing = rs_.positive_roots[r][dir];  // <alpha, e_dir>
            if (pairing == 0) continue;
            const MultiPoly diff = f - f.substitute_linear(reflections_[r]);
            if (diff.is_zero()) continue;
            result -= divide_exact(diff, root_forms_[r]).scaled(c * pairing);
        }
        return cache_[dir].emplace(m, std::move(result)).first->second;
    }

    const RootSystem rs_;
    const CMult c_;
    std::vector<RatMatrix> reflections_;
    std::vector<MultiPoly> root_forms_;
    std::vector<std::map<Monomial, MultiPoly, GrlexGreater>> cache_;
};

inline MultiPoly dunkl_apply_c(const RootSystem& rs, const CMult& c, const RatVec& y,
                               const MultiPoly& f) {
    DunklContext ctx(rs, c);
    return ctx.apply(y, f);
}

inline std::size_t rs_dim_check(const RootSystem& rs, const RatVec& y, const MultiPoly& f) {
    if (y.size() != rs.dim || f.dim() != rs.dim)
        throw PolyError("Dunkl input dimension mismatch");
    return rs.dim;
}

// T_y in the idempotent convention, real groups only: the orbit term is
// (<y,alpha>/alpha) (kappa_0 (f + s.f) + kappa_1 (f - s.f)). Preserves
// polynomials exactly when every kappa_0 vanishes; otherwise the division is
// non-exact and throws.
inline MultiPoly dunkl_apply_kappa(const RootSystem& rs, const KappaParam& k, const RatVec& y,
                                   const MultiPoly& f) {
    if (static_cast<int>(k.per_orbit.size()) != rs.num_orbits)
        throw PolyError("kappa orbit count mismatch");
    MultiPoly total(rs_dim_check(rs, y, f));
    for (std::size_t i = 0; i < rs.dim; ++i)
        if (y[i] != 0) total += f.partial_derivative(i).scaled(y[i]);
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const RatVec& kv = k.per_orbit[rs.orbit_of_root[r]];
        if (kv.size() != 2) throw PolyError("real group needs kappa vectors of length 2");
        const Rat pairing = dot(rs.positive_roots[r], y);
        if (pairing == 0) continue;
        const MultiPoly sf = f.substitute_linear(reflection_matrix(rs, r));
        MultiPoly numerator = (f + sf).scaled(kv[0]) + (f - sf).scaled(kv[1]);
        if (numerator.is_zero()) continue;
        const MultiPoly alpha = MultiPoly::linear_form(rs.positive_roots[r]);
        total += divide_exact(numerator, alpha).scaled(pairing);
    }
    return total;
}

struct CheckFailure {
    std::string context;
    Monomial monomial;
};

struct CheckReport {
    bool ok = true;
    std::vector<CheckFailure> failures;
    std::size_t checks = 0;
};

// [T_{y_i}, T_{y_j}] f = 0 for coordinate directions on all monomials of
// degree <= max_degree.
inline CheckReport check_commutativity(const RootSystem& rs, const CMult& c, int max_degree) {
    DunklContext ctx(rs, c);
    CheckReport report;
    std::vector<Monomial> monos;
    {
        Monomial cur(rs.dim, 0);
        auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
            if (pos == rs.dim) {
                monos.push_back(cur);
                return;
            }
            for (int e = 0; e <= budget; ++e) {
                cur[pos] = e;
                self(self, pos + 1, budget - e);
            }
            cur[pos] = 0;
        };
        rec(rec, 0, max_degree);
    }
    for (const auto& m : monos) {
        MultiPoly f(rs.dim);
        f.add_term(m, Rat(1));
        std::vector<MultiPoly> once;
        for (std::size_t i = 0; i < rs.dim; ++i) once.push_back(ctx.apply_coordinate(i, f));
        for (std::size_t i = 0; i < rs.dim; ++i)
            for (std::size_t j = i + 1; j < rs.dim; ++j) {
                ++report.checks;
                const MultiPoly bracket =
                    ctx.apply_coordinate(i, once[j]) - ctx.apply_coordinate(j, once[i]);
                if (!bracket.is_zero()) {
                    report.ok = false;
                    report.failures.push_back(
                        {"[T_" + std::to_string(i) + ",T_" + std::to_string(j) + "]", m});
                }
            }
    }
    return report;
}

// [T_y, x_j] f = <y,e_j> f - sum over positive roots of
// 2 c_alpha alpha_j <alpha,y> / (alpha,alpha) * s_alpha(f),
// checked as an operator identity on all monomials of degree <= max_degree.
inline CheckReport check_commutation_relation(const RootSystem& rs, const CMult& c,
                                              int max_degree) {
    DunklContext ctx(rs, c);
    CheckReport report;
    std::vector<RatMatrix> reflections;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        reflections.push_back(reflection_matrix(rs, r));
    std::vector<Monomial> monos;
    for (int d = 0; d <= max_degree; ++d) {
        Monomial cur(rs.dim, 0);
        auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
            if (pos + 1 == rs.dim) {
                cur[pos] = remaining;
                monos.push_back(cur);
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                cur[pos] = e;
                self(self, pos + 1, remaining - e);
            }
        };
        rec(rec, 0, d);
    }
    for (const auto& m : monos) {
        MultiPoly f(rs.dim);
        f.add_term(m, Rat(1));
        for (std::size_t dir = 0; dir < rs.dim; ++dir)
            for (std::size_t j = 0; j < rs.dim; ++j) {
                ++report.checks;
                const MultiPoly xj = MultiPoly::variable(rs.dim, j);
                const MultiPoly lhs =
                    ctx.apply_coordinate(dir, xj * f) - xj * ctx.apply_coordinate(dir, f);
                MultiPoly rhs = dir == j ? f : MultiPoly::zero(rs.dim);
                for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
                    const RatVec& a = rs.positive_roots[r];
                    const Rat coeff = 2 * c.of_orbit(rs.orbit_of_root[r]) * a[j] * a[dir] /
                                      dot(a, a);
                    if (coeff == 0) continue;
                    rhs -= f.substitute_linear(reflections[r]).scaled(coeff);
                }
                if (!(lhs == rhs)) {
                    report.ok = false;
                    report.failures.push_back(
                        {"[T_" + std::to_string(dir) + ",x_" + std::to_string(j) + "]", m});
                }
            }
    }
    return report;
}

inline bool is_invariant(const RootSystem& rs, const MultiPoly& f) {
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        if (!(f.substitute_linear(reflection_matrix(rs, r)) == f)) return false;
    return true;
}

// Substitutes the commuting Dunkl operators T_{y_i} for the symbols y_i of an
// invariant polynomial P and applies the result to an invariant f. Output is
// again invariant; both invariances are checked.
inline MultiPoly spherical_apply(const RootSystem& rs, const CMult& c, const MultiPoly& P,
                                 const MultiPoly& f) {
    if (P.dim() != rs.dim) throw PolyError("spherical_apply: symbol count mismatch");
    if (!is_invariant(rs, P)) throw PolyError("spherical_apply: P is not W-invariant");
    if (!is_invariant(rs, f)) throw PolyError("spherical_apply: f is not W-invariant");
    DunklContext ctx(rs, c);
    MultiPoly total(rs.dim);
    for (const auto& [m, coeff] : P.terms()) {
        MultiPoly g = f;
        for (std::size_t i = 0; i < rs.dim && !g.is_zero(); ++i)
            for (int e = 0; e < m[i]; ++e) g = ctx.apply_coordinate(i, g);
        total += g.scaled(coeff);
    }
    if (!is_invariant(rs, total)) throw PolyError("spherical_apply: output lost invariance");
    return total;
}

}  // namespace cherednik
