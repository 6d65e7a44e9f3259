#pragma once

#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/charproj.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/findim.hpp"
#include "cherednik/namikawa.hpp"
#include "cherednik/random.hpp"
#include "cherednik/rankone.hpp"
#include "cherednik/symmpair.hpp"

namespace cherednik {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    double seconds = 0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace detail {

template <typename F>
CheckResult timed_check(std::string name, F&& body) {
    CheckResult res;
    res.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    res.ok = body(detail);
    res.detail = detail.str();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace detail

// Classifier verdict matches the builtin table's simple column on every row
// and every in-constraint parameter instantiation in [lo, hi].
inline CheckResult check_table_reproduction(int lo = 2, int hi = 12) {
    return detail::timed_check("table-reproduction", [&](std::ostringstream& out) {
        int count = 0, bad = 0;
        for (const auto& rec : builtin_table())
            for (const auto& inst : instantiations(rec, lo, hi)) {
                ++count;
                if (simplicity_verdict_irreducible(inst).simple != inst.simple_expected) {
                    ++bad;
                    out << " mismatch:" << inst.display;
                }
            }
        out << "instances=" << count << " mismatches=" << bad;
        return bad == 0 && count > 0;
    });
}

// Every tabulated multiplicity value k survives the rank-one pipeline:
// b-function on 2k+1 variables, root shift at 0, kappa formula, gives (0, k).
inline CheckResult check_kappa_pipeline(int lo = 2, int hi = 12) {
    return detail::timed_check("kappa-pipeline", [&](std::ostringstream& out) {
        std::set<Rat> ks;
        for (const auto& rec : builtin_table())
            for (const auto& inst : instantiations(rec, lo, hi))
                for (const auto& k : inst.k_values()) ks.insert(k);
        int bad = 0;
        for (const auto& k : ks)
            if (!slice_roundtrip_value(k)) {
                ++bad;
                out << " fail:k=" << rat_to_string(k);
            }
        out << "k-values=" << ks.size() << " failures=" << bad;
        return bad == 0 && !ks.empty();
    });
}

// Symbolic oracle for the Laplacian b-function: apply sum of second partials
// to (sum x_i^2)^{s+1} and compare with 2(s+1)(2s+n) (sum x_i^2)^s, then
// check the factored closed form evaluates to the same scalar.
inline CheckResult check_laplacian_oracle(int n_max = 8, int s_max = 5) {
    return detail::timed_check("laplacian-oracle", [&](std::ostringstream& out) {
        int bad = 0, count = 0;
        for (int n = 2; n <= n_max; ++n) {
            MultiPoly u(n);
            for (int i = 0; i < n; ++i) {
                Monomial m(n, 0);
                m[i] = 2;
                u.add_term(m, Rat(1));
            }
            for (int s = 0; s <= s_max; ++s) {
                ++count;
                const MultiPoly up = u.pow(s + 1);
                MultiPoly lap(n);
                for (int i = 0; i < n; ++i)
                    lap += up.partial_derivative(i).partial_derivative(i);
                const Rat scalar = Rat(2) * (s + 1) * (2 * s + n);
                const bool direct = lap == u.pow(s).scaled(scalar);
                const bool closed =
                    laplacian_bfunction(n).evaluate({Rat(s)}) == scalar;
                if (!direct || !closed) {
                    ++bad;
                    out << " fail:n=" << n << ",s=" << s;
                }
            }
        }
        out << "cases=" << count << " failures=" << bad;
        return bad == 0;
    });
}

// Pairwise commutativity of the Dunkl operators on all monomials up to the
// given degree, for randomized rational multiplicities.
inline CheckResult check_dunkl_commutativity(std::uint64_t seed, int trials = 20,
                                             int max_degree = 6) {
    return detail::timed_check("dunkl-commutativity", [&](std::ostringstream& out) {
        const std::vector<std::pair<GroupType, int>> groups = {
            {GroupType::A, 2}, {GroupType::A, 3}, {GroupType::B, 2}, {GroupType::B, 3},
            {GroupType::D, 4}, {GroupType::G2, 2}, {GroupType::F4, 4}};
        Rng rng(seed);
        int bad = 0;
        std::size_t checks = 0;
        for (const auto& [type, rank] : groups) {
            const RootSystem rs = build_root_system(type, rank);
            const int deg = type == GroupType::F4 ? std::min(max_degree, 4) : max_degree;
            for (int t = 0; t < trials; ++t) {
                const Rat c_sh = rng.nonzero_rational(5, 5);
                const Rat c_lg = rs.num_orbits == 2 ? rng.nonzero_rational(5, 5) : c_sh;
                const CheckReport rep = check_commutativity(rs, CMult{c_sh, c_lg}, deg);
                checks += rep.checks;
                if (!rep.ok) {
                    ++bad;
                    out << " fail:" << rs.label() << "@trial" << t;
                }
            }
        }
        out << "bracket-evaluations=" << checks << " failures=" << bad;
        return bad == 0;
    });
}

// The [T_y, x_j] operator identity against its closed form, spot checked on
// small groups.
inline CheckResult check_commutation_identity() {
    return detail::timed_check("dunkl-commutation-identity", [&](std::ostringstream& out) {
        int bad = 0;
        struct Case {
            GroupType type;
            int rank;
            CMult c;
            int deg;
        };
        const std::vector<Case> cases = {
            {GroupType::A, 1, {Rat(7, 3), Rat(7, 3)}, 8},
            {GroupType::A, 2, {Rat(1, 2), Rat(1, 2)}, 5},
            {GroupType::B, 2, {Rat(3, 2), Rat(1)}, 4},
            {GroupType::G2, 2, {Rat(2, 5), Rat(5, 3)}, 4},
        };
        for (const auto& cs : cases) {
            const RootSystem rs = build_root_system(cs.type, cs.rank);
            const CheckReport rep = check_commutation_relation(rs, cs.c, cs.deg);
            if (!rep.ok) {
                ++bad;
                out << " fail:" << rs.label();
            }
        }
        out << "groups=" << cases.size() << " failures=" << bad;
        return bad == 0;
    });
}

// Rank-one annihilation and module structure: T kills x^{2m+1} at c = m+1/2,
// the 2m+1 dimensional module satisfies its relations, and the isotypic
// dimensions are (m+1, m).
inline CheckResult check_rank_one_module(int m_max = 10) {
    return detail::timed_check("rank-one-module", [&](std::ostringstream& out) {
        const RootSystem a1 = build_root_system(GroupType::A, 1);
        int bad = 0;
        for (int m = 0; m <= m_max; ++m) {
            const Rat c(2 * m + 1, 2);
            MultiPoly f(1);
            f.add_term({2 * m + 1}, Rat(1));
            if (!dunkl_apply_c(a1, CMult{c, c}, {Rat(1)}, f).is_zero()) {
                ++bad;
                out << " annihilation-fail:m=" << m;
            }
            const CherednikModuleA1 M(m);
            if (!module_relation_check(M).ok) {
                ++bad;
                out << " relations-fail:m=" << m;
            }
            if (M.dim_trivial() != m + 1 || M.dim_sign() != m) {
                ++bad;
                out << " isotypic-fail:m=" << m;
            }
            // Twist bookkeeping: the invariants of M match the sgn-isotypic
            // part of the sgn-twist (both count the even basis degrees).
            int fixed = 0, twisted_sgn = 0;
            for (int j = 0; j <= 2 * m; ++j) {
                if (j % 2 == 0) ++fixed;
                if (-(j % 2 == 0 ? 1 : -1) == -1) ++twisted_sgn;
            }
            if (fixed != twisted_sgn || fixed != m + 1) {
                ++bad;
                out << " twist-fail:m=" << m;
            }
        }
        out << "m<=" << m_max << " failures=" << bad;
        return bad == 0;
    });
}

// dim X_r[sgn] three ways (projection rank, character trace, exterior-power
// count) against binom(m-1, p).
inline CheckResult check_sgn_dim_three_way(int m_max = 6) {
    return detail::timed_check("sgn-dim-three-way", [&](std::ostringstream& out) {
        int bad = 0, count = 0;
        for (int p = 2; p <= 3; ++p)
            for (int m = 1; m <= m_max; ++m) {
                ++count;
                const XrModule M(p, 2 * m - 1);
                const SgnDimReport rep = sgn_isotypic_dim(M);
                if (!rep.agree) {
                    ++bad;
                    out << " fail:p=" << p << ",m=" << m;
                }
            }
        out << "cases=" << count << " failures=" << bad;
        return bad == 0;
    });
}

// The eleven non-simple table cases each produce the documented witness, and
// the witness scan agrees with the classifier on every instantiation.
inline CheckResult check_witness_catalog(int lo = 2, int hi = 12) {
    return detail::timed_check("witness-catalog", [&](std::ostringstream& out) {
        struct Expected {
            const char* label;
            PairParams params;
            char mechanism;
            long r;
            long m;
        };
        const std::vector<Expected> expected = {
            {"AIII", {2, 5, 0}, 'a', 7, 3},   {"BI", {2, 7, 0}, 'a', 5, 2},
            {"CII", {2, 4, 0}, 'a', 11, 5},   {"CII=", {2, 0, 0}, 'a', 3, 1},
            {"DI", {2, 6, 0}, 'b', 5, 3},     {"DIII4p", {2, 0, 0}, 'b', 5, 3},
            {"DIII4p2", {2, 0, 0}, 'a', 5, 2}, {"EIII", {}, 'a', 9, 4},
            {"EVI", {}, 'b', 5, 3},           {"EVII", {}, 'b', 9, 5},
            {"EIX", {}, 'b', 9, 5},
        };
        int bad = 0;
        for (const auto& e : expected) {
            const PairInstance inst = instantiate(find_record(e.label), e.params);
            const auto wit = parabolic_witness(inst);
            if (!wit || wit->mechanism != e.mechanism || wit->r != e.r || wit->m != e.m) {
                ++bad;
                out << " fail:" << inst.display;
                if (wit)
                    out << "(got " << wit->mechanism << ",r=" << wit->r << ",m=" << wit->m
                        << ")";
            }
        }
        int consistency_bad = 0, count = 0;
        for (const auto& rec : builtin_table())
            for (const auto& inst : instantiations(rec, lo, hi)) {
                ++count;
                if (parabolic_witness(inst).has_value() == inst.simple_expected)
                    ++consistency_bad;
            }
        out << "catalog-failures=" << bad << " consistency-checked=" << count
            << " consistency-failures=" << consistency_bad;
        return bad == 0 && consistency_bad == 0;
    });
}

// T applied l times to x^{lm} matches the spherical generator on z^m under
// z = x^l, for random kappa with kappa_0 = 0.
inline CheckResult check_cyclic_tower(std::uint64_t seed, int ell_max = 6, int m_range = 8,
                                      int trials = 5) {
    return detail::timed_check("cyclic-tower", [&](std::ostringstream& out) {
        Rng rng(seed);
        int bad = 0, count = 0;
        for (int ell = 1; ell <= ell_max; ++ell)
            for (int t = 0; t < trials; ++t) {
                RatVec kappa(ell, Rat(0));
                for (int i = 1; i < ell; ++i) kappa[i] = rng.rational(6, 6);
                const SphericalYCyclic Y = spherical_Y_cyclic(ell, kappa);
                for (long m = -m_range; m <= m_range; ++m) {
                    ++count;
                    Laurent1 f = Laurent1::monomial(static_cast<long>(ell) * m);
                    for (int k = 0; k < ell; ++k)
                        f = dunkl_apply_kappa_cyclic(ell, kappa, f);
                    const Laurent1 g = Y.apply(Laurent1::monomial(m));
                    // Compare coefficients under z = x^l: x^{lm - l} <-> z^{m-1}.
                    if (!(f.coeff(static_cast<long>(ell) * (m - 1)) == g.coeff(m - 1)) ||
                        f.terms().size() > 1 || g.terms().size() > 1) {
                        ++bad;
                        out << " fail:l=" << ell << ",m=" << m;
                    }
                }
            }
        out << "cases=" << count << " failures=" << bad;
        return bad == 0;
    });
}

// The twisted parameter action leaves the spherical generator unchanged and
// satisfies the group-action axiom.
inline CheckResult check_namikawa(std::uint64_t seed, int ell_max = 6, int pairs = 20,
                                  int m_range = 8) {
    return detail::timed_check("namikawa-invariance", [&](std::ostringstream& out) {
        Rng rng(seed);
        int bad = 0;
        for (int ell = 1; ell <= ell_max; ++ell) {
            for (int t = 0; t < pairs; ++t) {
                RatVec kappa(ell);
                for (int i = 0; i < ell; ++i) kappa[i] = rng.rational(6, 6);
                const ResiduePerm sigma = rng.permutation(ell);
                if (!verify_invariance_rank1(ell, kappa, sigma, m_range).ok) {
                    ++bad;
                    out << " invariance-fail:l=" << ell;
                }
                RatVec a = lambda_of_kappa(kappa);
                RatVec b = lambda_of_kappa(twisted_action(sigma, kappa));
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) {
                    ++bad;
                    out << " multiset-fail:l=" << ell;
                }
                const ResiduePerm tau = rng.permutation(ell);
                if (twisted_action(compose(sigma, tau), kappa) !=
                    twisted_action(sigma, twisted_action(tau, kappa))) {
                    ++bad;
                    out << " action-axiom-fail:l=" << ell;
                }
            }
            ResiduePerm id(ell);
            std::iota(id.begin(), id.end(), 0);
            RatVec kappa(ell, Rat(0));
            if (twisted_action(id, kappa) != kappa) {
                ++bad;
                out << " identity-fail:l=" << ell;
            }
        }
        out << "l<=" << ell_max << " pairs=" << pairs << " failures=" << bad;
        return bad == 0;
    });
}

// Euler grading of the rank-one generators: [Eu, Nabla] = -l Nabla,
// [Eu, X] = l X, and the constant term of the Euler image is sum
// sigma_i * deg delta_i.
inline CheckResult check_euler_grading(std::uint64_t seed, int m_range = 8) {
    return detail::timed_check("euler-grading", [&](std::ostringstream& out) {
        Rng rng(seed);
        int bad = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const int ell = static_cast<int>(rng.integer(1, 6));
            std::vector<std::pair<Rat, int>> weights;
            const int nfactors = static_cast<int>(rng.integer(1, 3));
            for (int i = 0; i < nfactors; ++i)
                weights.emplace_back(rng.rational(4, 4),
                                     static_cast<int>(rng.integer(1, 5)));
            const Rat d = euler_image(weights);
            LambdaRoots roots;
            roots.constant = rng.nonzero_rational(4, 4);
            for (int i = 0; i < ell; ++i) roots.lambda.push_back(rng.rational(6, 6));
            const RadialGenerators gen = radial_generators(ell, d, roots);
            // Eu z^0 = d z^0.
            if (!(gen.apply_Eu(Laurent1::monomial(0)) ==
                  Laurent1::monomial(0).scaled(d))) {
                ++bad;
                out << " d-fail:trial=" << trial;
            }
            for (long m = -m_range; m <= m_range; ++m) {
                const Laurent1 z = Laurent1::monomial(m);
                const Laurent1 lhs_n =
                    gen.apply_Eu(gen.apply_Nabla(z)) - gen.apply_Nabla(gen.apply_Eu(z));
                if (!(lhs_n == gen.apply_Nabla(z).scaled(Rat(-ell)))) {
                    ++bad;
                    out << " nabla-fail:m=" << m;
                }
                const Laurent1 lhs_x =
                    gen.apply_Eu(gen.apply_X(z)) - gen.apply_X(gen.apply_Eu(z));
                if (!(lhs_x == gen.apply_X(z).scaled(Rat(ell)))) {
                    ++bad;
                    out << " x-fail:m=" << m;
                }
            }
        }
        out << "trials=10 failures=" << bad;
        return bad == 0;
    });
}

inline SuiteReport run_suite(const std::string& selector, std::uint64_t seed,
                             int max_degree = 6) {
    SuiteReport rep;
    const bool all = selector == "all";
    if (all || selector == "table") {
        rep.checks.push_back(check_table_reproduction());
        rep.checks.push_back(check_kappa_pipeline());
    }
    if (all || selector == "dunkl") {
        rep.checks.push_back(check_dunkl_commutativity(seed, 20, max_degree));
        rep.checks.push_back(check_commutation_identity());
    }
    if (all || selector == "rank1") {
        rep.checks.push_back(check_laplacian_oracle());
        rep.checks.push_back(check_cyclic_tower(seed));
        rep.checks.push_back(check_euler_grading(seed));
    }
    if (all || selector == "findim") {
        rep.checks.push_back(check_rank_one_module());
        rep.checks.push_back(check_sgn_dim_three_way());
        rep.checks.push_back(check_witness_catalog());
    }
    if (all || selector == "namikawa") {
        rep.checks.push_back(check_namikawa(seed));
    }
    if (rep.checks.empty()) throw std::runtime_error("unknown suite '" + selector + "'");
    return rep;
}

}  // namespace cherednik
