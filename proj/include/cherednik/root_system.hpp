#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/multipoly.hpp"

namespace cherednik {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupType { A, B, C, D, G2, F4 };

inline std::string type_label(GroupType t) {
    switch (t) {
        case GroupType::A: return "A";
        case GroupType::B: return "B";
        case GroupType::C: return "C";
        case GroupType::D: return "D";
        case GroupType::G2: return "G2";
        case GroupType::F4: return "F4";
    }
    throw GroupError("bad type");
}

// Crystallographic root system in its standard coordinate realization.
// The ambient dimension is rank+1 for type A (rank >= 2) and rank otherwise;
// A1 is realized in one variable so that s = -1 and alpha = x.
struct RootSystem {
    GroupType type;
    int rank;
    std::size_t dim;
    std::vector<RatVec> positive_roots;
    std::vector<RatVec> coroots;           // alpha_vee = 2 alpha / (alpha,alpha)
    std::vector<int> simple_root_indices;  // Bourbaki order
    // Orbit label per positive root: 0 = short (or the only orbit), 1 = long.
    std::vector<int> orbit_of_root;
    int num_orbits = 1;

    std::string label() const {
        return type_label(type) + (type == GroupType::G2 || type == GroupType::F4
                                       ? ""
                                       : std::to_string(rank));
    }
};

namespace detail {

inline RatVec unit(std::size_t dim, std::size_t i, const Rat& v = Rat(1)) {
    RatVec e(dim, Rat(0));
    e[i] = v;
    return e;
}

inline void finish(RootSystem& rs) {
    rs.coroots.clear();
    std::set<Rat> norms;
    for (const auto& a : rs.positive_roots) norms.insert(dot(a, a));
    if (norms.size() > 2) throw GroupError("unexpected root lengths");
    rs.num_orbits = static_cast<int>(norms.size());
    const Rat short_norm = *norms.begin();
    rs.orbit_of_root.clear();
    for (const auto& a : rs.positive_roots) {
        const Rat n = dot(a, a);
        rs.orbit_of_root.push_back(n == short_norm && rs.num_orbits == 2 ? 0
                                   : rs.num_orbits == 2                  ? 1
                                                                         : 0);
        RatVec cv(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) cv[i] = 2 * a[i] / n;
        rs.coroots.push_back(cv);
    }
}

inline int root_index(const RootSystem& rs, const RatVec& v) {
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        if (rs.positive_roots[i] == v) return static_cast<int>(i);
    throw GroupError("simple root not found");
}

}  // namespace detail

inline RootSystem build_root_system(GroupType type, int rank) {
    using detail::unit;
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    switch (type) {
        case GroupType::A: {
            if (rank < 1 || rank > 5) throw GroupError("type A supports rank 1..5");
            if (rank == 1) {
                rs.dim = 1;
                rs.positive_roots = {unit(1, 0)};
                rs.simple_root_indices = {0};
                break;
            }
            const std::size_t n = rank + 1;
            rs.dim = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    RatVec a(n, Rat(0));
                    a[i] = 1;
                    a[j] = -1;
                    rs.positive_roots.push_back(a);
                }
            for (int i = 0; i < rank; ++i) {
                RatVec a(n, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_root_indices.push_back(detail::root_index(rs, a));
            }
            break;
        }
        case GroupType::B:
        case GroupType::C: {
            if (rank < 2 || rank > 4) throw GroupError("types B/C support rank 2..4");
            const std::size_t p = rank;
            rs.dim = p;
            for (std::size_t i = 0; i < p; ++i)
                rs.positive_roots.push_back(
                    type == GroupType::B ? unit(p, i) : unit(p, i, Rat(2)));
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = i + 1; j < p; ++j) {
                    RatVec a(p, Rat(0)), b(p, Rat(0));
                    a[i] = 1;
                    a[j] = -1;
                    b[i] = 1;
                    b[j] = 1;
                    rs.positive_roots.push_back(a);
                    rs.positive_roots.push_back(b);
                }
            for (std::size_t i = 0; i + 1 < p; ++i) {
                RatVec a(p, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_root_indices.push_back(detail::root_index(rs, a));
            }
            rs.simple_root_indices.push_back(detail::root_index(
                rs, type == GroupType::B ? unit(p, p - 1) : unit(p, p - 1, Rat(2))));
            break;
        }
        case GroupType::D: {
            if (rank < 2 || rank > 4) throw GroupError("type D supports rank 2..4");
            const std::size_t p = rank;
            rs.dim = p;
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = i + 1; j < p; ++j) {
                    RatVec a(p, Rat(0)), b(p, Rat(0));
                    a[i] = 1;
                    a[j] = -1;
                    b[i] = 1;
                    b[j] = 1;
                    rs.positive_roots.push_back(a);
                    rs.positive_roots.push_back(b);
                }
            for (std::size_t i = 0; i + 1 < p; ++i) {
                RatVec a(p, Rat(0));
                a[i] = 1;
                a[i + 1] = -1;
                rs.simple_root_indices.push_back(detail::root_index(rs, a));
            }
            RatVec last(p, Rat(0));
            last[p - 2] = 1;
            last[p - 1] = 1;
            rs.simple_root_indices.push_back(detail::root_index(rs, last));
            break;
        }
        case GroupType::G2: {
            rs.rank = 2;
            rs.dim = 3;
            auto v = [](long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; };
            rs.positive_roots = {
                v(1, -1, 0), v(-1, 0, 1), v(0, -1, 1),            // short
                v(-2, 1, 1), v(1, -2, 1), v(-1, -1, 2),           // long
            };
            rs.simple_root_indices = {0, 3};  // alpha1 short, alpha2 long
            break;
        }
        case GroupType::F4: {
            rs.rank = 4;
            rs.dim = 4;
            for (std::size_t i = 0; i < 4; ++i) rs.positive_roots.push_back(unit(4, i));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) {
                    RatVec a(4, Rat(0)), b(4, Rat(0));
                    a[i] = 1;
                    a[j] = -1;
                    b[i] = 1;
                    b[j] = 1;
                    rs.positive_roots.push_back(a);
                    rs.positive_roots.push_back(b);
                }
            const Rat h(1, 2);
            for (int s2 = -1; s2 <= 1; s2 += 2)
                for (int s3 = -1; s3 <= 1; s3 += 2)
                    for (int s4 = -1; s4 <= 1; s4 += 2)
                        rs.positive_roots.push_back({h, s2 * h, s3 * h, s4 * h});
            RatVec a1{Rat(0), Rat(1), Rat(-1), Rat(0)};
            RatVec a2{Rat(0), Rat(0), Rat(1), Rat(-1)};
            RatVec a3{Rat(0), Rat(0), Rat(0), Rat(1)};
            RatVec a4{h, -h, -h, -h};
            rs.simple_root_indices = {detail::root_index(rs, a1), detail::root_index(rs, a2),
                                      detail::root_index(rs, a3), detail::root_index(rs, a4)};
            break;
        }
    }
    detail::finish(rs);
    return rs;
}

inline std::size_t classical_group_order(GroupType type, int rank) {
    auto factorial = [](int n) {
        std::size_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (type) {
        case GroupType::A: return factorial(rank + 1);
        case GroupType::B:
        case GroupType::C: return (std::size_t{1} << rank) * factorial(rank);
        case GroupType::D: return (std::size_t{1} << (rank - 1)) * factorial(rank);
        case GroupType::G2: return 12;
        case GroupType::F4: return 1152;
    }
    throw GroupError("bad type");
}

// s_alpha = I - alpha (alpha_vee)^T.
inline RatMatrix reflection_matrix(const RootSystem& rs, std::size_t root_index) {
    const RatVec& a = rs.positive_roots.at(root_index);
    const RatVec& av = rs.coroots.at(root_index);
    RatMatrix m = RatMatrix::identity(rs.dim);
    for (std::size_t i = 0; i < rs.dim; ++i)
        for (std::size_t j = 0; j < rs.dim; ++j) m(i, j) -= a[i] * av[j];
    return m;
}

struct GroupElement {
    RatMatrix matrix;
    int det;                     // +1 or -1
    std::vector<int> orbit_parity;  // reflection-count parity per hyperplane orbit
};

struct GroupElementSet {
    std::vector<GroupElement> elements;
    std::size_t order() const { return elements.size(); }
};

// Breadth-first closure over the reflection generators. Also records, per
// element, the parity of the number of generators used from each orbit; the
// consistency of that labeling is checked so per-orbit sign characters are
// well defined.
inline GroupElementSet enumerate_group(const RootSystem& rs, std::size_t safety_bound = 2000) {
    std::vector<RatMatrix> gens;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        gens.push_back(reflection_matrix(rs, i));

    GroupElementSet set;
    std::map<RatMatrix, std::size_t> index;
    auto push = [&](const RatMatrix& m, int det, std::vector<int> parity) {
        if (index.count(m)) return false;
        index.emplace(m, set.elements.size());
        set.elements.push_back({m, det, std::move(parity)});
        return true;
    };
    push(RatMatrix::identity(rs.dim), 1, std::vector<int>(rs.num_orbits, 0));
    for (std::size_t head = 0; head < set.elements.size(); ++head) {
        const GroupElement cur = set.elements[head];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            RatMatrix next = cur.matrix * gens[g];
            std::vector<int> parity = cur.orbit_parity;
            parity[rs.orbit_of_root[g]] ^= 1;
            auto it = index.find(next);
            if (it != index.end()) {
                if (set.elements[it->second].orbit_parity != parity)
                    throw GroupError("orbit parity labeling inconsistent");
            } else {
                push(next, -cur.det, parity);
                if (set.elements.size() > safety_bound)
                    throw GroupError("group closure exceeds safety bound");
            }
        }
    }
    return set;
}

// Partition of the positive roots into W-orbits of hyperplanes (closure under
// all reflections, identifying a root with its negative). Short orbit first.
inline std::vector<std::vector<int>> hyperplane_orbits(const RootSystem& rs) {
    auto find_root = [&](const RatVec& v) {
        for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
            if (rs.positive_roots[i] == v) return static_cast<int>(i);
            bool neg = true;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (rs.positive_roots[i][k] != -v[k]) {
                    neg = false;
                    break;
                }
            if (neg) return static_cast<int>(i);
        }
        throw GroupError("reflection does not permute the root set");
    };
    std::vector<int> mark(rs.positive_roots.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t seed = 0; seed < rs.positive_roots.size(); ++seed) {
        if (mark[seed] >= 0) continue;
        std::vector<int> orbit{static_cast<int>(seed)};
        mark[seed] = static_cast<int>(orbits.size());
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (std::size_t g = 0; g < rs.positive_roots.size(); ++g) {
                const RatMatrix refl = reflection_matrix(rs, g);
                const int img = find_root(refl.apply(rs.positive_roots[orbit[head]]));
                if (mark[img] < 0) {
                    mark[img] = static_cast<int>(orbits.size());
                    orbit.push_back(img);
                }
            }
        orbits.push_back(std::move(orbit));
    }
    // Canonical order: short orbit first (matches orbit_of_root labels).
    if (orbits.size() == 2 && rs.orbit_of_root[orbits[0][0]] == 1)
        std::swap(orbits[0], orbits[1]);
    return orbits;
}

// Discriminant h = prod over positive roots of alpha^2 (all l_H = 2 here).
inline MultiPoly discriminant(const RootSystem& rs) {
    MultiPoly h = MultiPoly::constant(rs.dim, Rat(1));
    for (const auto& a : rs.positive_roots) {
        const MultiPoly lin = MultiPoly::linear_form(a);
        h *= lin * lin;
    }
    return h;
}

// (h_sh, h_lg); h_lg is 1 when there is a single hyperplane orbit.
inline std::pair<MultiPoly, MultiPoly> discriminant_factors(const RootSystem& rs) {
    MultiPoly h_sh = MultiPoly::constant(rs.dim, Rat(1));
    MultiPoly h_lg = MultiPoly::constant(rs.dim, Rat(1));
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
        const MultiPoly lin = MultiPoly::linear_form(rs.positive_roots[i]);
        (rs.orbit_of_root[i] == 0 ? h_sh : h_lg) *= lin * lin;
    }
    return {h_sh, h_lg};
}

// W-action on polynomials: (w.f)(x) = f(w^{-1} x). All our realizations are
// orthogonal, so w^{-1} = w^T and this is substitute_linear by w itself.
inline MultiPoly act(const GroupElement& w, const MultiPoly& p) {
    return p.substitute_linear(w.matrix);
}

inline MultiPoly act(const RatMatrix& w, const MultiPoly& p) {
    return p.substitute_linear(w);
}

}  // namespace cherednik
