#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/rankone.hpp"
#include "cherednik/rat.hpp"

namespace cherednik {

struct PairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PairParams {
    int p = 0, q = 0, n = 0;
};

// A concrete irreducible symmetric pair: restricted root data plus the
// multiplicity values k on each length orbit.
struct PairInstance {
    std::string record_label;  // e.g. "AIII"
    std::string display;       // e.g. "AIII_{2,5}"
    char family;               // restricted type family: A B C D G F E, or 's' (diagonal)
    int rank;
    long dim_p;
    int num_orbits;        // 1 or 2
    Rat k_short;           // the only value when num_orbits == 1
    Rat k_long;
    bool simple_expected;
    std::string justification;  // "nice", "BEG", "rank 1", "(1)".."(11)"
    PairParams params;

    std::string restricted_label() const {
        if (family == 's') return "R(s)";
        if (family == 'G') return "G2";
        if (family == 'F') return "F4";
        return std::string(1, family) + std::to_string(rank);
    }

    std::vector<Rat> k_values() const {
        return num_orbits == 2 ? std::vector<Rat>{k_short, k_long}
                               : std::vector<Rat>{k_short};
    }
};

// One table row; parametric rows carry a constraint and an evaluator.
struct SymmetricPairRecord {
    std::string label;
    std::vector<std::string> param_names;  // subset of {"p","q","n"}
    std::string restricted_display;
    std::string constraint_display;
    std::string rank_display;
    std::string dim_display;
    std::string k_display;  // "k" or "k_lg;k_sh"
    std::function<bool(const PairParams&)> constraint;
    std::function<PairInstance(const PairParams&)> make;
};

inline PairInstance instantiate(const SymmetricPairRecord& rec, const PairParams& params) {
    if (!rec.constraint(params))
        throw PairError(rec.label + ": parameters violate row constraints");
    return rec.make(params);
}

namespace detail {

inline PairInstance pair(std::string label, std::string display, char family, int rank,
                         long dim_p, int orbits, Rat k_short, Rat k_long, bool simple,
                         std::string just, PairParams params = {}) {
    return {std::move(label), std::move(display), family, rank,    dim_p,
            orbits,           std::move(k_short), std::move(k_long), simple,
            std::move(just),  params};
}

inline std::string sub2(const std::string& base, int a, int b) {
    return base + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace detail

inline const std::vector<SymmetricPairRecord>& builtin_table() {
    using detail::pair;
    using detail::sub2;
    static const std::vector<SymmetricPairRecord> table = [] {
        std::vector<SymmetricPairRecord> t;
        auto always = [](const PairParams&) { return true; };
        auto fixed = [&](std::string label, char fam, int rank, long dim, int orbits,
                         Rat k_sh, Rat k_lg, bool simple, std::string just,
                         std::string rdisp, std::string kdisp) {
            std::string l = label;
            t.push_back({std::move(label), {}, std::move(rdisp), "", std::to_string(rank),
                         std::to_string(dim), std::move(kdisp), always,
                         [=](const PairParams&) {
                             return pair(l, l, fam, rank, dim, orbits, k_sh, k_lg, simple,
                                         just);
                         }});
        };

        t.push_back({"diagonal",
                     {},
                     "R(s)",
                     "s simple",
                     "rank(s)",
                     "dim(s)",
                     "1",
                     always,
                     [](const PairParams&) {
                         return pair("diagonal", "diagonal", 's', 0, 0, 1, Rat(1), Rat(1),
                                     true, "nice");
                     }});

        t.push_back({"AI",
                     {"n"},
                     "A_{n-1}",
                     "2<=n",
                     "n-1",
                     "(n-1)(n+2)/2",
                     "1/2",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("AI", "AI_" + std::to_string(x.n), 'A', x.n - 1,
                                     static_cast<long>(x.n - 1) * (x.n + 2) / 2, 1,
                                     Rat(1, 2), Rat(1, 2), true, "nice", x);
                     }});

        t.push_back({"AII",
                     {"n"},
                     "A_{n-1}",
                     "2<=n",
                     "n-1",
                     "(n-1)(2n+1)",
                     "2",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("AII", "AII_" + std::to_string(x.n), 'A', x.n - 1,
                                     static_cast<long>(x.n - 1) * (2 * x.n + 1), 1, Rat(2),
                                     Rat(2), true, "BEG", x);
                     }});

        t.push_back({"AIII",
                     {"p", "q"},
                     "B_p",
                     "2<=p, p<q",
                     "p",
                     "2pq",
                     "1;q-p+1/2",
                     [](const PairParams& x) { return x.p >= 2 && x.q > x.p; },
                     [](const PairParams& x) {
                         return pair("AIII", sub2("AIII", x.p, x.q), 'B', x.p,
                                     2L * x.p * x.q, 2, Rat(x.q - x.p) + Rat(1, 2), Rat(1),
                                     false, "(1)", x);
                     }});

        t.push_back({"AIII=",
                     {"n"},
                     "C_n",
                     "2<=n",
                     "n",
                     "2n^2",
                     "1/2;1",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("AIII=", sub2("AIII", x.n, x.n), 'C', x.n,
                                     2L * x.n * x.n, 2, Rat(1), Rat(1, 2), true, "nice", x);
                     }});

        t.push_back({"AIV",
                     {"n"},
                     "A_1",
                     "2<=n",
                     "1",
                     "2n",
                     "n-1/2",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("AIV", "AIV_" + std::to_string(x.n), 'A', 1,
                                     2L * x.n, 1, Rat(x.n) - Rat(1, 2), Rat(x.n) - Rat(1, 2),
                                     false, "rank 1", x);
                     }});

        t.push_back({"BI",
                     {"p", "q"},
                     "B_p",
                     "2<=p, p+3<=q, q-p odd",
                     "p",
                     "pq",
                     "1/2;(q-p)/2",
                     [](const PairParams& x) {
                         return x.p >= 2 && x.q >= x.p + 3 && (x.q - x.p) % 2 == 1;
                     },
                     [](const PairParams& x) {
                         return pair("BI", sub2("BI", x.p, x.q), 'B', x.p,
                                     static_cast<long>(x.p) * x.q, 2, Rat(x.q - x.p, 2),
                                     Rat(1, 2), false, "(2)", x);
                     }});

        t.push_back({"BI+",
                     {"p"},
                     "B_p",
                     "2<=p",
                     "p",
                     "p(p+1)",
                     "1/2;1/2",
                     [](const PairParams& x) { return x.p >= 2; },
                     [](const PairParams& x) {
                         return pair("BI+", sub2("BI", x.p, x.p + 1), 'B', x.p,
                                     static_cast<long>(x.p) * (x.p + 1), 2, Rat(1, 2),
                                     Rat(1, 2), true, "nice", x);
                     }});

        t.push_back({"BII",
                     {"n"},
                     "A_1",
                     "2<=n",
                     "1",
                     "2n",
                     "n-1/2",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("BII", "BII_" + std::to_string(x.n), 'A', 1, 2L * x.n,
                                     1, Rat(x.n) - Rat(1, 2), Rat(x.n) - Rat(1, 2), false,
                                     "rank 1", x);
                     }});

        t.push_back({"CI",
                     {"n"},
                     "C_n",
                     "2<=n",
                     "n",
                     "n(n+1)",
                     "1/2;1/2",
                     [](const PairParams& x) { return x.n >= 2; },
                     [](const PairParams& x) {
                         return pair("CI", "CI_" + std::to_string(x.n), 'C', x.n,
                                     static_cast<long>(x.n) * (x.n + 1), 2, Rat(1, 2),
                                     Rat(1, 2), true, "nice", x);
                     }});

        t.push_back({"CII",
                     {"p", "q"},
                     "B_p",
                     "2<=p, p+1<=q",
                     "p",
                     "4pq",
                     "2;2(q-p)+3/2",
                     [](const PairParams& x) { return x.p >= 2 && x.q >= x.p + 1; },
                     [](const PairParams& x) {
                         return pair("CII", sub2("CII", x.p, x.q), 'B', x.p,
                                     4L * x.p * x.q, 2,
                                     Rat(2 * (x.q - x.p)) + Rat(3, 2), Rat(2), false, "(3)",
                                     x);
                     }});

        t.push_back({"CII1",
                     {"q"},
                     "A_1",
                     "2<=q",
                     "1",
                     "4q",
                     "2q-1/2",
                     [](const PairParams& x) { return x.q >= 2; },
                     [](const PairParams& x) {
                         return pair("CII1", sub2("CII", 1, x.q), 'A', 1, 4L * x.q, 1,
                                     Rat(2 * x.q) - Rat(1, 2), Rat(2 * x.q) - Rat(1, 2),
                                     false, "rank 1", x);
                     }});

        t.push_back({"CII=",
                     {"p"},
                     "C_p",
                     "2<=p",
                     "p",
                     "4p^2",
                     "3/2;2",
                     [](const PairParams& x) { return x.p >= 2; },
                     [](const PairParams& x) {
                         return pair("CII=", sub2("CII", x.p, x.p), 'C', x.p,
                                     4L * x.p * x.p, 2, Rat(2), Rat(3, 2), false, "(4)", x);
                     }});

        t.push_back({"DI",
                     {"p", "q"},
                     "B_p",
                     "2<=p, p+4<=q, q-p even",
                     "p",
                     "pq",
                     "1/2;(q-p)/2",
                     [](const PairParams& x) {
                         return x.p >= 2 && x.q >= x.p + 4 && (x.q - x.p) % 2 == 0;
                     },
                     [](const PairParams& x) {
                         return pair("DI", sub2("DI", x.p, x.q), 'B', x.p,
                                     static_cast<long>(x.p) * x.q, 2, Rat(x.q - x.p, 2),
                                     Rat(1, 2), false, "(5)", x);
                     }});

        t.push_back({"DI+",
                     {"p"},
                     "B_{p-1}",
                     "3<=p",
                     "p-1",
                     "p^2-1",
                     "1/2;1",
                     [](const PairParams& x) { return x.p >= 3; },
                     [](const PairParams& x) {
                         return pair("DI+", sub2("DI", x.p - 1, x.p + 1), 'B', x.p - 1,
                                     static_cast<long>(x.p) * x.p - 1, 2, Rat(1), Rat(1, 2),
                                     true, "nice", x);
                     }});

        t.push_back({"DI=",
                     {"p"},
                     "D_p",
                     "3<=p",
                     "p",
                     "p^2",
                     "1/2",
                     [](const PairParams& x) { return x.p >= 3; },
                     [](const PairParams& x) {
                         return pair("DI=", sub2("DI", x.p, x.p), 'D', x.p,
                                     static_cast<long>(x.p) * x.p, 1, Rat(1, 2), Rat(1, 2),
                                     true, "nice", x);
                     }});

        t.push_back({"DII",
                     {"p"},
                     "A_1",
                     "3<=p",
                     "1",
                     "2p-1",
                     "p-1",
                     [](const PairParams& x) { return x.p >= 3; },
                     [](const PairParams& x) {
                         return pair("DII", "DII_" + std::to_string(x.p), 'A', 1,
                                     2L * x.p - 1, 1, Rat(x.p - 1), Rat(x.p - 1), true,
                                     "BEG", x);
                     }});

        t.push_back({"DIII4p",
                     {"p"},
                     "C_p",
                     "2<=p",
                     "p",
                     "2p(2p-1)",
                     "1/2;2",
                     [](const PairParams& x) { return x.p >= 2; },
                     [](const PairParams& x) {
                         return pair("DIII4p", "DIII_" + std::to_string(4 * x.p), 'C', x.p,
                                     2L * x.p * (2 * x.p - 1), 2, Rat(2), Rat(1, 2), false,
                                     "(6)", x);
                     }});

        t.push_back({"DIII4p2",
                     {"p"},
                     "B_p",
                     "2<=p",
                     "p",
                     "2p(2p+1)",
                     "2;5/2",
                     [](const PairParams& x) { return x.p >= 2; },
                     [](const PairParams& x) {
                         return pair("DIII4p2", "DIII_" + std::to_string(4 * x.p + 2), 'B',
                                     x.p, 2L * x.p * (2 * x.p + 1), 2, Rat(5, 2), Rat(2),
                                     false, "(7)", x);
                     }});

        fixed("EI", 'E', 6, 42, 1, Rat(1, 2), Rat(1, 2), true, "nice", "E_6", "1/2");
        fixed("EII", 'F', 4, 40, 2, Rat(1), Rat(1, 2), true, "nice", "F_4", "1/2;1");
        fixed("EIII", 'B', 2, 32, 2, Rat(9, 2), Rat(3), false, "(8)", "B_2", "3;9/2");
        fixed("EIV", 'A', 2, 26, 1, Rat(4), Rat(4), true, "BEG", "A_2", "4");
        fixed("EV", 'E', 7, 70, 1, Rat(1, 2), Rat(1, 2), true, "nice", "E_7", "1/2");
        fixed("EVI", 'F', 4, 64, 2, Rat(2), Rat(1, 2), false, "(9)", "F_4", "1/2;2");
        fixed("EVII", 'C', 3, 54, 2, Rat(4), Rat(1, 2), false, "(10)", "C_3", "1/2;4");
        fixed("EVIII", 'E', 8, 128, 1, Rat(1, 2), Rat(1, 2), true, "nice", "E_8", "1/2");
        fixed("EIX", 'F', 4, 112, 2, Rat(4), Rat(1, 2), false, "(11)", "F_4", "1/2;4");
        fixed("FI", 'F', 4, 28, 2, Rat(1, 2), Rat(1, 2), true, "nice", "F_4", "1/2;1/2");
        fixed("FII", 'A', 1, 16, 1, Rat(15, 2), Rat(15, 2), false, "rank 1", "A_1", "15/2");
        fixed("G", 'G', 2, 8, 2, Rat(1, 2), Rat(1, 2), true, "nice", "G_2", "1/2;1/2");
        return t;
    }();
    return table;
}

inline const SymmetricPairRecord& find_record(const std::string& label) {
    for (const auto& rec : builtin_table())
        if (rec.label == label) return rec;
    throw PairError("unknown symmetric pair label '" + label + "'");
}

// k_alpha <= 1 everywhere. Vacuously true for a trivial pair.
inline bool is_nice(const std::vector<Rat>& ks) {
    for (const auto& k : ks)
        if (k > 1) return false;
    return true;
}

inline bool is_integral(const std::vector<Rat>& ks) {
    for (const auto& k : ks)
        if (!is_integer(k)) return false;
    return true;
}

struct Verdict {
    bool simple;
    std::string reason;
};

inline Verdict simplicity_verdict_irreducible(const PairInstance& inst) {
    const auto ks = inst.k_values();
    if (is_nice(ks)) return {true, "nice"};
    if (is_integral(ks)) return {true, "integral"};
    return {false, inst.rank == 1 ? "rank-1 multiplicity m+1/2 with m>=1"
                                  : "neither nice nor integral"};
}

// A product is robust exactly when every irreducible summand is nice or
// integral; trivial summands never affect the verdict.
inline bool is_robust(const std::vector<PairInstance>& summands) {
    for (const auto& s : summands) {
        const auto ks = s.k_values();
        if (!is_nice(ks) && !is_integral(ks)) return false;
    }
    return true;
}

inline Verdict simplicity_verdict(const std::vector<PairInstance>& summands) {
    for (const auto& s : summands) {
        const Verdict v = simplicity_verdict_irreducible(s);
        if (!v.simple) return {false, s.display + ": " + v.reason};
    }
    return {true, "robust"};
}

// kappa = (0, k) per length orbit; short orbit first to match the root-system
// orbit convention.
inline KappaParam kappa_of_pair(const PairInstance& inst) {
    KappaParam k;
    k.per_orbit.push_back({Rat(0), inst.k_short});
    if (inst.num_orbits == 2) k.per_orbit.push_back({Rat(0), inst.k_long});
    return k;
}

// c = -k per orbit.
inline CMult c_from_pair(const PairInstance& inst) {
    return {-inst.k_short, -inst.k_long};
}

// Slice check for one orbit with multiplicity k: the rank-one slice has
// m_alpha = 2k, the ambient slice dimension is m_alpha + 1, and the pipeline
// b-function -> root shift at sigma = 0 -> kappa must return (0, k).
inline bool slice_roundtrip_value(const Rat& k) {
    const Rat n = 2 * k + 1;
    if (!is_integer(n) || n < 1) return false;
    const BFunction b = laplacian_bfunction(static_cast<int>(floor_int(n)));
    const LambdaRoots roots = shift_roots(b, {Rat(0)});
    const RatVec kappa = kappa_from_lambda(roots.lambda, 2);
    return kappa.size() == 2 && kappa[0] == 0 && kappa[1] == k;
}

struct SliceReport {
    bool ok;
    std::vector<std::pair<Rat, bool>> per_orbit;  // (k, pipeline agrees)
};

inline SliceReport slice_roundtrip(const PairInstance& inst) {
    SliceReport rep{true, {}};
    for (const auto& k : inst.k_values()) {
        const bool ok = slice_roundtrip_value(k);
        rep.per_orbit.emplace_back(k, ok);
        rep.ok = rep.ok && ok;
    }
    return rep;
}

// Every in-constraint instantiation of a record with all named parameters
// ranging over [lo, hi].
inline std::vector<PairInstance> instantiations(const SymmetricPairRecord& rec, int lo,
                                                int hi) {
    std::vector<PairInstance> out;
    auto consider = [&](const PairParams& params) {
        if (rec.constraint(params)) out.push_back(rec.make(params));
    };
    const auto& names = rec.param_names;
    if (names.empty()) {
        consider(PairParams{});
        return out;
    }
    std::vector<int> values(names.size(), lo);
    while (true) {
        PairParams params;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == "p") params.p = values[i];
            else if (names[i] == "q") params.q = values[i];
            else params.n = values[i];
        }
        consider(params);
        std::size_t pos = 0;
        while (pos < values.size() && ++values[pos] > hi) values[pos++] = lo;
        if (pos == values.size()) break;
    }
    return out;
}

}  // namespace cherednik
