#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cherednik/symmpair.hpp"

using namespace cherednik;

TEST_CASE("the builtin table has every family exactly once") {
    const std::set<std::string> expected = {
        "diagonal", "AI",   "AII",     "AIII", "AIII=", "AIV", "BI",   "BI+",
        "BII",      "CI",   "CII",     "CII1", "CII=",  "DI",  "DI+",  "DI=",
        "DII",      "DIII4p", "DIII4p2", "EI",  "EII",   "EIII", "EIV", "EV",
        "EVI",      "EVII", "EVIII",   "EIX",  "FI",    "FII", "G"};
    std::set<std::string> seen;
    for (const auto& rec : builtin_table()) CHECK(seen.insert(rec.label).second);
    CHECK(seen == expected);
    CHECK(builtin_table().size() == 31);
    CHECK_THROWS_AS(find_record("XYZ"), PairError);
}

TEST_CASE("golden values for specific rows") {
    {
        const PairInstance inst = instantiate(find_record("AIII"), {2, 5, 0});
        CHECK(inst.display == "AIII_{2,5}");
        CHECK(inst.family == 'B');
        CHECK(inst.rank == 2);
        CHECK(inst.dim_p == 20);
        CHECK(inst.k_short == Rat(7, 2));  // q - p + 1/2
        CHECK(inst.k_long == Rat(1));
        CHECK_FALSE(inst.simple_expected);
        CHECK(inst.restricted_label() == "B2");
    }
    {
        const PairInstance inst = instantiate(find_record("BI"), {2, 7, 0});
        CHECK(inst.k_short == Rat(5, 2));  // (q-p)/2
        CHECK(inst.k_long == Rat(1, 2));
        CHECK_FALSE(inst.simple_expected);
        const CMult c = c_from_pair(inst);
        CHECK(c.c_short == Rat(-5, 2));
        CHECK(c.c_long == Rat(-1, 2));
        const KappaParam k = kappa_of_pair(inst);
        REQUIRE(k.per_orbit.size() == 2);
        CHECK(k.per_orbit[0][0] == Rat(0));
        CHECK(k.per_orbit[0][1] == Rat(5, 2));
        CHECK(k.per_orbit[1][1] == Rat(1, 2));
    }
    {
        const PairInstance inst = instantiate(find_record("CII"), {2, 4, 0});
        CHECK(inst.k_short == Rat(11, 2));  // 2(q-p) + 3/2
        CHECK(inst.k_long == Rat(2));
        CHECK_FALSE(inst.simple_expected);
    }
    {
        const PairInstance inst = instantiate(find_record("DII"), {4, 0, 0});
        CHECK(inst.rank == 1);
        CHECK(inst.k_short == Rat(3));  // p - 1, integral
        CHECK(inst.simple_expected);
    }
    {
        const PairInstance inst = instantiate(find_record("FII"), {});
        CHECK(inst.k_short == Rat(15, 2));
        CHECK(inst.dim_p == 16);
        CHECK_FALSE(inst.simple_expected);
    }
    {
        const PairInstance inst = instantiate(find_record("EIX"), {});
        CHECK(inst.family == 'F');
        CHECK(inst.k_short == Rat(4));
        CHECK(inst.k_long == Rat(1, 2));
        CHECK_FALSE(inst.simple_expected);
    }
    {
        const PairInstance inst = instantiate(find_record("G"), {});
        CHECK(inst.k_short == Rat(1, 2));
        CHECK(inst.k_long == Rat(1, 2));
        CHECK(inst.simple_expected);
    }
}

TEST_CASE("constraint violations are rejected") {
    CHECK_THROWS_AS(instantiate(find_record("AIII"), {1, 5, 0}), PairError);  // p < 2
    CHECK_THROWS_AS(instantiate(find_record("AIII"), {3, 3, 0}), PairError);  // q = p
    CHECK_THROWS_AS(instantiate(find_record("BI"), {2, 6, 0}), PairError);    // even diff
    CHECK_THROWS_AS(instantiate(find_record("BI"), {2, 3, 0}), PairError);    // diff < 3
    CHECK_THROWS_AS(instantiate(find_record("DI"), {2, 5, 0}), PairError);    // odd diff
    CHECK_THROWS_AS(instantiate(find_record("DI+"), {2, 0, 0}), PairError);   // p < 3
    CHECK_THROWS_AS(instantiate(find_record("AI"), {0, 0, 1}), PairError);    // n < 2
}

TEST_CASE("classifier agrees with the recorded verdict on every instantiation") {
    int total = 0;
    for (const auto& rec : builtin_table())
        for (const auto& inst : instantiations(rec, 2, 12)) {
            ++total;
            const Verdict v = simplicity_verdict_irreducible(inst);
            CHECK(v.simple == inst.simple_expected);
            // the three predicates behave as documented
            const auto ks = inst.k_values();
            if (inst.justification == "nice") CHECK(is_nice(ks));
            if (inst.justification == "BEG") CHECK(is_integral(ks));
            if (!v.simple) CHECK((!is_nice(ks) && !is_integral(ks)));
        }
    CHECK(total >= 300);  // the parametric rows fan out
}

TEST_CASE("rank-one rows are simple exactly when k is a small half-integer") {
    for (const std::string& label : {"AIV", "BII", "CII1", "FII", "DII"}) {
        for (const auto& inst : instantiations(find_record(label), 2, 10)) {
            REQUIRE(inst.rank == 1);
            const Rat k = inst.k_short;
            // non-simple iff k = m + 1/2 with m >= 1
            const bool bad = is_half_integer(k) && k >= Rat(3, 2);
            CHECK(inst.simple_expected == !bad);
        }
    }
}

TEST_CASE("product verdicts") {
    const PairInstance good1 = instantiate(find_record("AI"), {0, 0, 4});
    const PairInstance good2 = instantiate(find_record("EIV"), {});
    const PairInstance bad = instantiate(find_record("FII"), {});
    CHECK(is_robust({good1, good2}));
    CHECK(simplicity_verdict({good1, good2}).simple);
    CHECK_FALSE(is_robust({good1, bad}));
    const Verdict v = simplicity_verdict({good1, bad, good2});
    CHECK_FALSE(v.simple);
    CHECK(v.reason.find("FII") != std::string::npos);
    CHECK(is_robust({}));

    // a summand that is integral but not nice still yields a robust product
    const PairInstance integral = instantiate(find_record("AII"), {0, 0, 3});
    CHECK_FALSE(is_nice(integral.k_values()));
    CHECK(is_integral(integral.k_values()));
    CHECK(is_robust({good1, integral}));
}

TEST_CASE("slice pipeline reproduces each multiplicity") {
    // direct worked value: k = 5/2 -> n = 6 -> kappa = (0, 5/2)
    CHECK(slice_roundtrip_value(Rat(5, 2)));
    CHECK(slice_roundtrip_value(Rat(1, 2)));
    CHECK(slice_roundtrip_value(Rat(4)));
    CHECK_FALSE(slice_roundtrip_value(Rat(1, 3)));  // 2k+1 not an integer
    CHECK_FALSE(slice_roundtrip_value(Rat(-1)));

    for (const auto& rec : builtin_table())
        for (const auto& inst : instantiations(rec, 2, 12)) {
            if (inst.record_label == "diagonal") continue;
            CHECK(slice_roundtrip(inst).ok);
        }
}
