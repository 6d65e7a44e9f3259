#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/findim.hpp"
#include "cherednik/random.hpp"

using namespace cherednik;

TEST_CASE("rank-one module satisfies the defining relations") {
    for (int m : {0, 1, 2, 5}) {
        const CherednikModuleA1 M(m);
        CHECK(M.dim() == static_cast<std::size_t>(2 * m + 1));
        CHECK(M.c() == Rat(2 * m + 1, 2));
        const RelationReport rep = module_relation_check(M);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        CHECK(M.dim_trivial() == m + 1);
        CHECK(M.dim_sign() == m);
        CHECK(M.dim_trivial() + M.dim_sign() == static_cast<int>(M.dim()));
    }
    CHECK_THROWS_AS(CherednikModuleA1(-1), ModuleError);
}

TEST_CASE("rank-one isotypic dimensions via explicit projection") {
    // project each basis vector onto the s = +1 and s = -1 eigenspaces
    for (int m : {1, 3, 4}) {
        const CherednikModuleA1 M(m);
        int even = 0, odd = 0;
        for (int j = 0; j < static_cast<int>(M.dim()); ++j) {
            const RatVec v = M.basis_vector(j);
            const RatVec sv = M.apply_s(v);
            bool plus = true, minus = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (sv[i] != v[i]) plus = false;
                if (sv[i] != -v[i]) minus = false;
            }
            even += plus;
            odd += minus;
        }
        CHECK(even == M.dim_trivial());
        CHECK(odd == M.dim_sign());
    }
}

TEST_CASE("hyperoctahedral group enumeration and sign character") {
    for (int p : {1, 2, 3}) {
        const auto group = enumerate_Bp(p);
        long factorial = 1;
        for (int i = 2; i <= p; ++i) factorial *= i;
        CHECK(group.size() == static_cast<std::size_t>(factorial << p));
        long sum = 0;
        for (const auto& w : group) sum += w.sgn();
        CHECK(sum == 0);  // sgn is a nontrivial character
    }
    // transposition times one sign flip
    const BpElement w{{1, 0}, {1, -1}};
    CHECK(w.sgn() == 1);
    const BpElement t{{1, 0}, {1, 1}};
    CHECK(t.sgn() == -1);
}

TEST_CASE("tensor module carries a genuine group action") {
    Rng rng(1212);
    for (int p : {2, 3}) {
        const XrModule M(p, 3);
        const auto& group = M.group();
        for (int trial = 0; trial < 40; ++trial) {
            const BpElement& w1 = group[rng.integer(0, group.size() - 1)];
            const BpElement& w2 = group[rng.integer(0, group.size() - 1)];
            // product element: positions move through w2 then w1
            BpElement prod;
            prod.perm.resize(p);
            prod.eps.resize(p);
            for (int i = 0; i < p; ++i) {
                prod.perm[i] = w1.perm[w2.perm[i]];
                prod.eps[i] = w2.eps[i] * w1.eps[w2.perm[i]];
            }
            for (long idx = 0; idx < M.dim(); ++idx) {
                const auto [mid, s2] = M.apply(w2, idx);
                const auto [fin, s1] = M.apply(w1, mid);
                const auto [direct, s] = M.apply(prod, idx);
                CHECK(fin == direct);
                CHECK(s1 * s2 == s);
            }
        }
        // index round trip
        for (long idx = 0; idx < M.dim(); ++idx)
            CHECK(M.tuple_index(M.index_tuple(idx)) == idx);
    }
}

TEST_CASE("construction from multiplicities") {
    CHECK(build_X_r(2, Rat(3, 2), Rat(1)).r() == 5);
    CHECK(build_X_r(3, Rat(1, 2), Rat(1)).r() == 5);
    CHECK(build_X_r(2, Rat(1, 2), Rat(0)).r() == 1);
    CHECK_THROWS_AS(build_X_r(2, Rat(1), Rat(1)), ModuleError);        // even r
    CHECK_THROWS_AS(build_X_r(2, Rat(1, 3), Rat(0)), ModuleError);     // non-integer
    CHECK_THROWS_AS(build_X_r(2, Rat(-3, 2), Rat(0)), ModuleError);    // negative
    CHECK_THROWS_AS(XrModule(2, 4), ModuleError);
}

TEST_CASE("sign isotypic dimension agrees across three computations") {
    struct Case {
        int p, r;
        long expected;  // binom((r+1)/2 - 1, p)
    };
    const std::vector<Case> cases = {
        {2, 3, 0},  {2, 5, 1},  {2, 7, 3},  {2, 9, 6},
        {3, 5, 0},  {3, 7, 1},  {3, 9, 4},  {3, 11, 10},
        {1, 1, 0},  {1, 7, 3},
    };
    for (const auto& cs : cases) {
        const XrModule M(cs.p, cs.r);
        const SgnDimReport rep = sgn_isotypic_dim(M);
        CHECK(rep.agree);
        CHECK(rep.by_projection == cs.expected);
        CHECK(rep.by_trace == Rat(cs.expected));
        CHECK(rep.by_exterior == cs.expected);
    }
}

TEST_CASE("isotypic dimensions are consistent with the total dimension") {
    for (int p : {2, 3})
        for (int r : {3, 5}) {
            const XrModule M(p, r);
            const Rat triv = isotypic_dim_trace_bp(M, M.group(), M.dim(), bp_trivial());
            const Rat sign = isotypic_dim_trace_bp(M, M.group(), M.dim(), bp_sign());
            CHECK(is_integer(triv));
            CHECK(is_integer(sign));
            CHECK(triv >= 0);
            CHECK(sign >= 0);
            CHECK(triv + sign <= Rat(M.dim()));
            // invariants of the tensor power: symmetric even tuples,
            // binom(p + (r-1)/2, p) of them
            CHECK(triv == Rat(binom(p + (r - 1) / 2, p)));
        }
}

TEST_CASE("twisting by the sign character exchanges the isotypic pieces") {
    for (int p : {2, 3})
        for (int r : {3, 5, 7}) {
            const XrModule M(p, r);
            const TwistedXr tw = twist(M, bp_sign());
            const Rat plain_triv = isotypic_dim_trace_bp(M, M.group(), M.dim(), bp_trivial());
            const Rat plain_sign = isotypic_dim_trace_bp(M, M.group(), M.dim(), bp_sign());
            CHECK(isotypic_dim_trace_bp(tw, M.group(), M.dim(), bp_sign()) == plain_triv);
            CHECK(isotypic_dim_trace_bp(tw, M.group(), M.dim(), bp_trivial()) == plain_sign);
        }
}

TEST_CASE("simple root length patterns") {
    const SimpleRootPattern b3 = simple_root_pattern('B', 3);
    CHECK(b3.orbit == std::vector<int>{1, 1, 0});
    CHECK(b3.double_bond_at == std::vector<int>{1});
    const SimpleRootPattern c3 = simple_root_pattern('C', 3);
    CHECK(c3.orbit == std::vector<int>{0, 0, 1});
    const SimpleRootPattern f4 = simple_root_pattern('F', 4);
    CHECK(f4.orbit == std::vector<int>{1, 1, 0, 0});
    CHECK(f4.double_bond_at == std::vector<int>{1});
    const SimpleRootPattern g2 = simple_root_pattern('G', 2);
    CHECK(g2.double_bond_at.empty());
    const SimpleRootPattern a4 = simple_root_pattern('A', 4);
    CHECK(a4.orbit == std::vector<int>(4, 0));
    CHECK(a4.double_bond_at.empty());
}

TEST_CASE("witness search finds the right mechanism on known rows") {
    {
        const auto w = parabolic_witness(instantiate(find_record("AIII"), {2, 5, 0}));
        REQUIRE(w.has_value());
        CHECK(w->mechanism == 'a');
        CHECK(w->c == Rat(7, 2));
        CHECK(w->r == 7);
        CHECK(w->m == 3);
    }
    {
        const auto w = parabolic_witness(instantiate(find_record("EVI"), {}));
        REQUIRE(w.has_value());
        CHECK(w->mechanism == 'b');
        CHECK(w->r == 5);
        CHECK(w->m == 3);
    }
    {
        const auto w = parabolic_witness(instantiate(find_record("DI"), {2, 6, 0}));
        REQUIRE(w.has_value());
        CHECK(w->mechanism == 'b');  // k = (2, 1/2): 2(2 + 1/2) = 5
        CHECK(w->r == 5);
    }
    {
        const auto w = parabolic_witness(instantiate(find_record("FII"), {}));
        REQUIRE(w.has_value());
        CHECK(w->mechanism == 'a');
        CHECK(w->m == 7);  // k = 15/2
    }
    CHECK_FALSE(parabolic_witness(instantiate(find_record("G"), {})).has_value());
    CHECK_FALSE(parabolic_witness(instantiate(find_record("FI"), {})).has_value());
    CHECK_FALSE(parabolic_witness(instantiate(find_record("AI"), {0, 0, 5})).has_value());
}

TEST_CASE("witness existence matches non-simplicity across the table") {
    for (const auto& rec : builtin_table())
        for (const auto& inst : instantiations(rec, 2, 12)) {
            const bool has_witness = parabolic_witness(inst).has_value();
            CHECK(has_witness == !inst.simple_expected);
            if (has_witness) {
                const WitnessReport w = *parabolic_witness(inst);
                CHECK(w.r >= 3);
                CHECK(w.r % 2 == 1);
                // mechanism (a) reports r = 2m+1; mechanism (b) has m = (r+1)/2
                CHECK(w.r == (w.mechanism == 'a' ? 2 * w.m + 1 : 2 * w.m - 1));
            }
        }
}
