#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/laurent.hpp"
#include "cherednik/multipoly.hpp"
#include "cherednik/parse.hpp"
#include "cherednik/random.hpp"

using namespace cherednik;

namespace {

MultiPoly random_poly(Rng& rng, std::size_t dim, int max_degree, int max_terms) {
    MultiPoly p(dim);
    const int terms = static_cast<int>(rng.integer(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m(dim);
        int budget = max_degree;
        for (std::size_t i = 0; i < dim; ++i) {
            m[i] = static_cast<int>(rng.integer(0, budget));
            budget -= m[i];
        }
        p.add_term(m, rng.rational(9, 5));
    }
    return p;
}

MultiPoly from_text(const std::string& s, std::vector<std::string> vars) {
    return parse_poly(s, vars);
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    const std::vector<std::string> xy = {"x", "y"};
    CHECK(from_text("(x+y)*(x-y)", xy) == from_text("x^2-y^2", xy));
    const MultiPoly p = from_text("x^2-3*y", xy);
    CHECK(p + MultiPoly::zero(2) == p);
    CHECK(from_text("(x+1)^3", xy) == from_text("x^3+3*x^2+3*x+1", xy));
    // pow via repeated multiplication as an independent oracle
    MultiPoly cube = from_text("x+1", xy);
    cube = cube * from_text("x+1", xy) * from_text("x+1", xy);
    CHECK(cube == from_text("(x+1)^3", xy));
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
        const MultiPoly a = random_poly(rng, dim, 6, 4);
        const MultiPoly b = random_poly(rng, dim, 6, 4);
        const MultiPoly c = random_poly(rng, dim, 6, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly::zero(dim));
    }
}

TEST_CASE("partial derivatives") {
    const std::vector<std::string> xy = {"x", "y"};
    CHECK(from_text("x^3*y", xy).partial_derivative(0) == from_text("3*x^2*y", xy));
    CHECK(from_text("y^2", xy).partial_derivative(0).is_zero());
    CHECK(from_text("(x+y)^4", xy).partial_derivative(0) == from_text("4*(x+y)^3", xy));
    CHECK_THROWS_AS(from_text("x", xy).partial_derivative(5), PolyError);
}

TEST_CASE("linear substitution") {
    const std::vector<std::string> xy = {"x", "y"};
    RatMatrix neg = RatMatrix::identity(1);
    neg(0, 0) = -1;
    CHECK(parse_poly("x", {"x"}).substitute_linear(neg) == parse_poly("-x", {"x"}));

    RatMatrix swap(2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    const MultiPoly sym = from_text("x^2+y^2", xy);
    CHECK(sym.substitute_linear(swap) == sym);

    // B2-type reflection swapping coordinates with a sign, against the
    // explicit image computed by hand: xy -> (-y)(-x) = xy.
    RatMatrix sswap(2);
    sswap(0, 1) = -1;
    sswap(1, 0) = -1;
    CHECK(from_text("x*y", xy).substitute_linear(sswap) == from_text("x*y", xy));
    CHECK(from_text("x", xy).substitute_linear(sswap) == from_text("-y", xy));
}

TEST_CASE("substitution composes contravariantly and is multiplicative") {
    Rng rng(202);
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
        RatMatrix m1(dim), m2(dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                m1(r, c) = rng.rational(3, 2);
                m2(r, c) = rng.rational(3, 2);
            }
        const MultiPoly p = random_poly(rng, dim, 4, 3);
        const MultiPoly q = random_poly(rng, dim, 4, 3);
        CHECK(p.substitute_linear(m1 * m2) ==
              p.substitute_linear(m2).substitute_linear(m1));
        CHECK((p * q).substitute_linear(m1) ==
              p.substitute_linear(m1) * q.substitute_linear(m1));
    }
}

TEST_CASE("exact division") {
    const std::vector<std::string> xy = {"x", "y"};
    CHECK(divide_exact(from_text("x^2-y^2", xy), from_text("x-y", xy)) ==
          from_text("x+y", xy));
    CHECK(divide_exact(MultiPoly::zero(2), from_text("x-y", xy)).is_zero());
    const MultiPoly quotient =
        divide_exact(from_text("(x+2*y)^3-(x-2*y)^3", xy), from_text("4*y", xy));
    CHECK(quotient * from_text("4*y", xy) ==
          from_text("(x+2*y)^3-(x-2*y)^3", xy));
    CHECK_THROWS_AS(divide_exact(from_text("x^2+y^2", xy), from_text("x-y", xy)),
                    NonExactDivision);
    CHECK_THROWS_AS(divide_exact(from_text("x", xy), MultiPoly::zero(2)),
                    NonExactDivision);
}

TEST_CASE("division round trip on random pairs") {
    Rng rng(303);
    int nonzero = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
        const MultiPoly p = random_poly(rng, dim, 4, 3);
        MultiPoly q = random_poly(rng, dim, 3, 3);
        if (q.is_zero()) q = MultiPoly::variable(dim, 0);
        ++nonzero;
        CHECK(divide_exact(p * q, q) == p);
    }
    CHECK(nonzero == 400);
}

TEST_CASE("parser accepts the grammar and reports positions") {
    const std::vector<std::string> xy = {"x", "y"};
    MultiPoly p(2);
    p.add_term({2, 0}, Rat(1));
    p.add_term({1, 1}, Rat(-2));
    CHECK(from_text("x^2 - 2*x*y", xy) == p);
    MultiPoly h(2);
    h.add_term({1, 0}, Rat(1, 2));
    CHECK(from_text("1/2*x", xy) == h);
    CHECK(from_text("x^3+3*x^2+3*x+1", xy) == from_text("(x+1)^3", xy));
    CHECK(from_text("-x - 3", xy) == from_text("0 - x - 3", xy));
    CHECK_THROWS_AS(from_text("-x + -3", xy), ParseError);  // no unary minus mid-expression

    CHECK_THROWS_AS(from_text("x + z", xy), ParseError);
    CHECK_THROWS_AS(from_text("x^y", xy), ParseError);
    CHECK_THROWS_AS(from_text("x +", xy), ParseError);
    CHECK_THROWS_AS(from_text("(x", xy), ParseError);
    CHECK_THROWS_AS(from_text("1/0", xy), ParseError);
    try {
        from_text("x + q", xy);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("print then parse is the identity") {
    Rng rng(404);
    const std::vector<std::string> names = {"x1", "x2", "x3", "x4"};
    for (int i = 0; i < 300; ++i) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
        const MultiPoly p = random_poly(rng, dim, 6, 5);
        const std::vector<std::string> vars(names.begin(), names.begin() + dim);
        CHECK(parse_poly(p.to_string(vars), vars) == p);
    }
}

TEST_CASE("euler operator scales by total degree") {
    const std::vector<std::string> xy = {"x", "y"};
    CHECK(euler_apply(from_text("x^3*y", xy)) == from_text("4*x^3*y", xy));
    CHECK(euler_apply(from_text("1", xy)).is_zero());
    const MultiPoly mixed = from_text("x^3*y + 5*x - 7", xy);
    CHECK(euler_apply(mixed) == from_text("4*x^3*y + 5*x", xy));
}

TEST_CASE("one-variable Laurent arithmetic") {
    const Laurent1 a = Laurent1::monomial(-2, Rat(3)) + Laurent1::monomial(1);
    CHECK(a.coeff(-2) == 3);
    CHECK(a.shifted(2).coeff(0) == 3);
    CHECK((a * Laurent1::monomial(0, Rat(2))).coeff(1) == 2);
    CHECK((a - a).is_zero());
    CHECK((a.to_string() == "z - 3*z^-2" || a.to_string() == "z + 3*z^-2"));
    CHECK(Laurent1().to_string() == "0");
}
