#pragma once

#include <vector>

#include "cherednik/multipoly.hpp"
#include "cherednik/root_system.hpp"

namespace cherednik {

// Linear character of W given by a sign per hyperplane orbit, extended
// multiplicatively via the per-element reflection parity recorded during
// group enumeration.
struct LinearCharacter {
    std::vector<int> orbit_value;  // +1 or -1 per orbit

    int operator()(const GroupElement& w) const {
        if (w.orbit_parity.size() != orbit_value.size())
            throw GroupError("character/orbit shape mismatch");
        int v = 1;
        for (std::size_t o = 0; o < orbit_value.size(); ++o)
            if (w.orbit_parity[o] & 1) v *= orbit_value[o];
        return v;
    }
};

inline LinearCharacter trivial_character(const RootSystem& rs) {
    return {std::vector<int>(rs.num_orbits, 1)};
}

inline LinearCharacter sign_character(const RootSystem& rs) {
    return {std::vector<int>(rs.num_orbits, -1)};
}

// All exponent vectors of the given exact total degree.
inline std::vector<Monomial> monomial_basis(std::size_t dim, int degree) {
    std::vector<Monomial> out;
    Monomial cur(dim, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == dim) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (dim == 0) return out;
    rec(rec, 0, degree);
    return out;
}

inline std::vector<Monomial> monomial_basis_up_to(std::size_t dim, int max_degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto level = monomial_basis(dim, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// e_chi f = (1/|W|) sum_w chi(w)^{-1} w.f; chi is real valued so the inverse
// is chi itself.
inline MultiPoly idempotent_apply(const GroupElementSet& group, const LinearCharacter& chi,
                                  const MultiPoly& f) {
    MultiPoly total(f.dim());
    for (const auto& w : group.elements) {
        MultiPoly g = act(w, f);
        total += chi(w) > 0 ? g : -g;
    }
    return total.scaled(Rat(1, static_cast<long>(group.order())));
}

// Basis of the chi-isotypic component of the span of the given polynomials,
// via projection followed by row reduction in monomial coordinates.
inline std::vector<MultiPoly> isotypic_basis(const GroupElementSet& group,
                                             const LinearCharacter& chi,
                                             const std::vector<MultiPoly>& spanning) {
    std::vector<MultiPoly> projected;
    std::map<Monomial, std::size_t, GrlexGreater> coords;
    for (const auto& f : spanning) {
        MultiPoly p = idempotent_apply(group, chi, f);
        if (p.is_zero()) continue;
        projected.push_back(std::move(p));
        for (const auto& [m, c] : projected.back().terms())
            coords.emplace(m, coords.size());
    }
    std::vector<Monomial> order(coords.size());
    for (const auto& [m, idx] : coords) order[idx] = m;
    std::vector<RatVec> rows;
    for (const auto& p : projected) {
        RatVec row(coords.size(), Rat(0));
        for (const auto& [m, c] : p.terms()) row[coords.at(m)] = c;
        rows.push_back(std::move(row));
    }
    row_reduce(rows);
    std::vector<MultiPoly> basis;
    const std::size_t dim = spanning.empty() ? 0 : spanning[0].dim();
    for (const auto& row : rows) {
        MultiPoly p(dim);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) p.add_term(order[j], row[j]);
        basis.push_back(std::move(p));
    }
    return basis;
}

// Trace of w on the span of a monomial set: sum over basis monomials of the
// diagonal coefficient of the image.
inline Rat monomial_space_trace(const GroupElement& w, const std::vector<Monomial>& basis) {
    Rat t(0);
    for (const auto& m : basis) {
        MultiPoly x(m.size());
        x.add_term(m, Rat(1));
        t += act(w, x).coeff(m);
    }
    return t;
}

// Character inner product <chi, span of basis> = (1/|W|) sum chi(w) tr(w).
inline Rat isotypic_dim_trace(const GroupElementSet& group, const LinearCharacter& chi,
                              const std::vector<Monomial>& basis) {
    Rat total(0);
    for (const auto& w : group.elements) {
        const Rat t = monomial_space_trace(w, basis);
        total += chi(w) > 0 ? t : -t;
    }
    return total / Rat(static_cast<long>(group.order()));
}

}  // namespace cherednik
