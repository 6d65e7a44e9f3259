#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/dunkl.hpp"
#include "cherednik/random.hpp"

using namespace cherednik;

namespace {

MultiPoly monomial_poly(std::size_t dim, Monomial m) {
    MultiPoly p(dim);
    p.add_term(std::move(m), Rat(1));
    return p;
}

MultiPoly random_poly(Rng& rng, std::size_t dim, int max_degree, int max_terms) {
    MultiPoly p(dim);
    const int terms = static_cast<int>(rng.integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(dim);
        int budget = max_degree;
        for (std::size_t i = 0; i < dim; ++i) {
            m[i] = static_cast<int>(rng.integer(0, budget));
            budget -= m[i];
        }
        p.add_term(m, rng.rational(7, 4));
    }
    return p;
}

}  // namespace

TEST_CASE("rank-one operator on monomials in closed form") {
    const RootSystem a1 = build_root_system(GroupType::A, 1);
    for (const Rat& c : {Rat(0), Rat(1, 2), Rat(3, 2), Rat(-2, 3)}) {
        DunklContext ctx(a1, CMult{c, c});
        for (int n = 0; n <= 9; ++n) {
            const MultiPoly img = ctx.apply_coordinate(0, monomial_poly(1, {n}));
            if (n == 0) {
                CHECK(img.is_zero());
                continue;
            }
            // T(x^n) = (n - c (1 - (-1)^n)) x^{n-1}
            const Rat coeff = Rat(n) - (n % 2 == 1 ? 2 * c : Rat(0));
            CHECK(img == monomial_poly(1, {n - 1}).scaled(coeff));
        }
        // annihilation of x^{2m+1} exactly at c = m + 1/2
        if (c == Rat(3, 2))
            CHECK(ctx.apply_coordinate(0, monomial_poly(1, {3})).is_zero());
    }
}

TEST_CASE("operators lower degree by exactly one") {
    Rng rng(505);
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::G2}) {
        const RootSystem rs = build_root_system(t, 2);
        DunklContext ctx(rs, CMult{rng.nonzero_rational(5, 3), rng.nonzero_rational(5, 3)});
        for (int trial = 0; trial < 10; ++trial) {
            const MultiPoly f = random_poly(rng, rs.dim, 5, 4);
            const MultiPoly img = ctx.apply_coordinate(rng.integer(0, rs.dim - 1) % rs.dim, f);
            for (const auto& [m, coeff] : img.terms()) {
                int deg = 0;
                for (int e : m) deg += e;
                CHECK(deg <= f.degree() - 1);
            }
        }
    }
}

TEST_CASE("pairwise commutativity on exhaustive monomial bases") {
    Rng rng(606);
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::G2}) {
        const RootSystem rs = build_root_system(t, 2);
        for (int trial = 0; trial < 3; ++trial) {
            const CMult c{rng.rational(5, 3), rng.rational(5, 3)};
            const CheckReport rep = check_commutativity(rs, c, 5);
            CHECK(rep.ok);
            CHECK(rep.checks > 0);
        }
    }
    const RootSystem a3 = build_root_system(GroupType::A, 3);
    CHECK(check_commutativity(a3, CMult{Rat(2, 7), Rat(2, 7)}, 4).ok);
    const RootSystem d4 = build_root_system(GroupType::D, 4);
    CHECK(check_commutativity(d4, CMult{Rat(-1, 3), Rat(-1, 3)}, 3).ok);
}

TEST_CASE("commutation with coordinate multiplication") {
    const RootSystem a1 = build_root_system(GroupType::A, 1);
    CHECK(check_commutation_relation(a1, CMult{Rat(5, 2), Rat(5, 2)}, 8).ok);

    // spot check the A1 closed form [T, x] = 1 - 2c s directly
    const Rat c(3, 7);
    DunklContext ctx(a1, CMult{c, c});
    const RatMatrix s = reflection_matrix(a1, 0);
    for (int n = 0; n <= 6; ++n) {
        const MultiPoly f = monomial_poly(1, {n});
        const MultiPoly x = MultiPoly::variable(1, 0);
        const MultiPoly lhs = ctx.apply_coordinate(0, x * f) - x * ctx.apply_coordinate(0, f);
        const MultiPoly rhs = f - f.substitute_linear(s).scaled(2 * c);
        CHECK(lhs == rhs);
    }

    for (GroupType t : {GroupType::A, GroupType::B, GroupType::G2}) {
        const RootSystem rs = build_root_system(t, 2);
        CHECK(check_commutation_relation(rs, CMult{Rat(1, 2), Rat(-2, 5)}, 4).ok);
    }
}

TEST_CASE("equivariance under the group action") {
    Rng rng(707);
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::G2}) {
        const RootSystem rs = build_root_system(t, 2);
        const GroupElementSet group = enumerate_group(rs);
        DunklContext ctx(rs, CMult{rng.nonzero_rational(4, 3), rng.nonzero_rational(4, 3)});
        for (int trial = 0; trial < 5; ++trial) {
            const MultiPoly f = random_poly(rng, rs.dim, 4, 3);
            RatVec y(rs.dim);
            for (auto& v : y) v = rng.rational(4, 3);
            for (const auto& w : group.elements) {
                // w . (T_y f) = T_{w(y)} (w . f)
                const MultiPoly lhs = act(w, ctx.apply(y, f));
                const MultiPoly rhs = ctx.apply(w.matrix.apply(y), act(w, f));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("parameter conventions agree through the bridge") {
    Rng rng(808);
    for (GroupType t : {GroupType::A, GroupType::B, GroupType::G2}) {
        const RootSystem rs = build_root_system(t, 2);
        for (int trial = 0; trial < 5; ++trial) {
            const CMult c{rng.rational(4, 3), rng.rational(4, 3)};
            const KappaParam k = c_to_kappa(rs, c);
            // round trip
            const CMult back = kappa_to_c(rs, k);
            CHECK(back.c_short == c.c_short);
            if (rs.num_orbits == 2) CHECK(back.c_long == c.c_long);
            // both conventions produce the same operator
            const MultiPoly f = random_poly(rng, rs.dim, 4, 3);
            RatVec y(rs.dim);
            for (auto& v : y) v = rng.rational(3, 2);
            CHECK(dunkl_apply_c(rs, c, y, f) == dunkl_apply_kappa(rs, k, y, f));
        }
    }

    const RootSystem b2 = build_root_system(GroupType::B, 2);
    KappaParam bad;
    bad.per_orbit = {{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
    CHECK_THROWS_AS(kappa_to_c(b2, bad), ConversionError);
    KappaParam short_vec;
    short_vec.per_orbit = {{Rat(0)}, {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(kappa_to_c(b2, short_vec), ConversionError);
    KappaParam wrong_count;
    wrong_count.per_orbit = {{Rat(0), Rat(1)}};
    CHECK_THROWS_AS(kappa_to_c(b2, wrong_count), ConversionError);
}

TEST_CASE("spherical operators on invariants") {
    const RootSystem a1 = build_root_system(GroupType::A, 1);
    const Rat c(2, 5);
    // P = y^2, f = x^2: T^2(x^2) = 2(1 - 2c)
    MultiPoly P = monomial_poly(1, {2});
    const MultiPoly out = spherical_apply(a1, CMult{c, c}, P, monomial_poly(1, {2}));
    CHECK(out == MultiPoly::constant(1, 2 * (1 - 2 * c)));

    const RootSystem b2 = build_root_system(GroupType::B, 2);
    MultiPoly sum_sq(2);
    sum_sq.add_term({2, 0}, Rat(1));
    sum_sq.add_term({0, 2}, Rat(1));
    const MultiPoly quartic = sum_sq * sum_sq;
    const MultiPoly img = spherical_apply(b2, CMult{Rat(1, 3), Rat(1, 4)}, sum_sq, quartic);
    CHECK(is_invariant(b2, img));
    CHECK(img.degree() == 2);

    // non-invariant inputs are rejected
    CHECK_THROWS_AS(
        spherical_apply(b2, CMult{Rat(1), Rat(1)}, MultiPoly::variable(2, 0), sum_sq),
        PolyError);
    CHECK_THROWS_AS(
        spherical_apply(b2, CMult{Rat(1), Rat(1)}, sum_sq, MultiPoly::variable(2, 0)),
        PolyError);
}
