#include <doctest.h>

#include <random>

#include "ordim/extension.hpp"
#include "ordim/generators.hpp"
#include "ordim/representation.hpp"
#include "support/random_poset.hpp"

using namespace ordim;

namespace {

Generated majorization36() {
    FamilySpec spec;
    spec.family = Family::MajorizationGrid;
    spec.n = 3;
    spec.denom = 6;
    return generate(spec);
}

Generated theorem12(long k) {
    FamilySpec spec;
    spec.family = Family::Theorem12Grid;
    spec.k = k;
    return generate(spec);
}

} // namespace

TEST_CASE("validate_representation grades tables") {
    SUBCASE("partial-sum rows on the 3-outcome grid are plain but not strict") {
        auto g = majorization36();
        auto rep = validate_representation(g.poset, *g.mu);
        CHECK(rep.kind == ReprKind::Plain);
        CHECK_FALSE(rep.strict_failure.empty());
    }
    SUBCASE("rank row on a chain is injective") {
        Poset c = Poset::chain({"a", "b", "c"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1), Rational(2)}};
        CHECK(validate_representation(c, mu).kind == ReprKind::Injective);
    }
    SUBCASE("modulus and sign rows are plain but not strict") {
        auto g = theorem12(3);
        auto rep = validate_representation(g.poset, *g.mu);
        CHECK(rep.kind == ReprKind::Plain);
        CHECK(rep.strict_failure.find("ties") != std::string::npos);
    }
    SUBCASE("wrong direction fails plain with a counterexample") {
        Poset c = Poset::chain({"a", "b"});
        MultiUtility mu;
        mu.rows = {{Rational(1), Rational(0)}};
        auto rep = validate_representation(c, mu);
        CHECK(rep.kind == ReprKind::None);
        CHECK_FALSE(rep.plain_failure.empty());
    }
    SUBCASE("a single monotone row on a non-total poset is not a multi-utility") {
        Poset p = Poset::antichain({"a", "b"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1)}};
        CHECK(validate_representation(p, mu).kind == ReprKind::None);
        CHECK(classify_monotone_row(p, mu.rows[0]) == RowKind::Injective);
    }
}

TEST_CASE("classify_monotone_row") {
    Poset c = Poset::chain({"a", "b", "c"});
    CHECK(classify_monotone_row(c, {Rational(0), Rational(1), Rational(2)}) == RowKind::Injective);
    CHECK(classify_monotone_row(c, {Rational(0), Rational(0), Rational(1)}) == RowKind::Monotone);
    CHECK(classify_monotone_row(c, {Rational(1), Rational(0), Rational(2)}) == RowKind::None);
    Poset p = Poset::antichain({"a", "b"});
    CHECK(classify_monotone_row(p, {Rational(0), Rational(0)}) == RowKind::Strict);
}

TEST_CASE("increasing_family_from_multi_utility") {
    SUBCASE("two-element antichain yields four preimage sets") {
        Poset p = Poset::antichain({"a", "b"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        auto fam = increasing_family_from_multi_utility(p, mu);
        REQUIRE(fam.sets.size() == 4);
        CHECK(fam.set_labels(0) == std::vector<std::string>{"a", "b"});
        CHECK(fam.set_labels(1) == std::vector<std::string>{"b"});
        CHECK(fam.set_labels(2) == std::vector<std::string>{"a", "b"});
        CHECK(fam.set_labels(3) == std::vector<std::string>{"a"});
    }
    SUBCASE("chain with ranks yields the nested up-sets") {
        Poset c = Poset::chain({"a", "b", "c"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1), Rational(2)}};
        auto fam = increasing_family_from_multi_utility(c, mu);
        REQUIRE(fam.sets.size() == 3);
        CHECK(fam.set_labels(0) == std::vector<std::string>{"a", "b", "c"});
        CHECK(fam.set_labels(1) == std::vector<std::string>{"b", "c"});
        CHECK(fam.set_labels(2) == std::vector<std::string>{"c"});
    }
    SUBCASE("family from a random table always totalizes the figure base") {
        Poset p = generate({Family::Figure1}).poset;
        std::mt19937 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            auto mu = testing::random_multi_utility(rng, p, 2 + trial % 3);
            auto fam = increasing_family_from_multi_utility(p, mu);
            check_increasing(p, fam);
            auto t = debreu_extension_from_sets(p, fam);
            CHECK(t.limit.is_total());
        }
    }
}

TEST_CASE("geometric-sum injective monotone") {
    Poset p = Poset::antichain({"x", "y"});
    auto fam = IncreasingSetFamily::from_subsets(p, {{"y"}, {"x", "y"}});
    SUBCASE("r = 1/4") {
        auto u = injective_monotone_from_family(fam, Rational(1, 4));
        CHECK(u[p.index_of("x")] == Rational(1, 4));
        CHECK(u[p.index_of("y")] == Rational(5, 4));
    }
    SUBCASE("r = 1/3") {
        auto u = injective_monotone_from_family(fam, Rational(1, 3));
        CHECK(u[p.index_of("x")] == Rational(1, 3));
        CHECK(u[p.index_of("y")] == Rational(4, 3));
    }
    SUBCASE("radix bounds are strict") {
        CHECK_THROWS_WITH_AS(injective_monotone_from_family(fam, Rational(1, 2)),
                             doctest::Contains("BadRadix"), Error);
        CHECK_THROWS_WITH_AS(injective_monotone_from_family(fam, Rational(0)),
                             doctest::Contains("BadRadix"), Error);
    }
    SUBCASE("unseparated elements are rejected") {
        auto bad = IncreasingSetFamily::from_subsets(p, {{"x", "y"}});
        CHECK_THROWS_WITH_AS(injective_monotone_from_family(bad, Rational(1, 4)),
                             doctest::Contains("InsufficientSeparation"), Error);
    }
    SUBCASE("first-differing-set law on a generated family") {
        auto g = theorem12(3);
        auto fam3 = increasing_family_from_multi_utility(g.poset, *g.mu);
        auto u = injective_monotone_from_family(fam3, Rational(1, 4));
        CHECK(classify_monotone_row(g.poset, u) == RowKind::Injective);
        std::size_t n = g.poset.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                for (const auto& mask : fam3.sets) {
                    if (mask[i] == mask[j]) continue;
                    CHECK((u[i] < u[j]) == (mask[j] == 1));
                    break;
                }
            }
    }
}

TEST_CASE("injective multi-utility via set swapping") {
    SUBCASE("chain: every row induces the one linear extension") {
        Poset c = Poset::chain({"a", "b", "c"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1), Rational(2)}};
        auto inj = injective_multi_utility_from_multi_utility(c, mu, Rational(1, 4));
        CHECK(validate_representation(c, inj).kind == ReprKind::Injective);
        for (const auto& row : inj.rows) {
            CHECK(row[0] < row[1]);
            CHECK(row[1] < row[2]);
        }
    }
    SUBCASE("antichain rows disagree in direction") {
        Poset p = Poset::antichain({"a", "b"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        auto inj = injective_multi_utility_from_multi_utility(p, mu, Rational(1, 4));
        CHECK(validate_representation(p, inj).kind == ReprKind::Injective);
        bool up = false, down = false;
        for (const auto& row : inj.rows) {
            if (row[0] < row[1]) up = true;
            if (row[1] < row[0]) down = true;
        }
        CHECK(up);
        CHECK(down);
    }
    SUBCASE("figure base with a random table") {
        Poset p = generate({Family::Figure1}).poset;
        std::mt19937 rng(7);
        auto mu = testing::random_multi_utility(rng, p, 2);
        auto inj = injective_multi_utility_from_multi_utility(p, mu, Rational(1, 4));
        CHECK(validate_representation(p, inj).kind == ReprKind::Injective);
    }
}

TEST_CASE("realizer_from_multi_utility") {
    SUBCASE("chain with one row") {
        Poset c = Poset::chain({"a", "b", "c"});
        MultiUtility mu;
        mu.rows = {{Rational(0), Rational(1), Rational(2)}};
        auto r = realizer_from_multi_utility(c, mu);
        REQUIRE(r.members.size() == 1);
        CHECK(r.members[0] == c);
    }
    SUBCASE("3-outcome grid partial sums intersect back to the grid") {
        auto g = majorization36();
        auto r = realizer_from_multi_utility(g.poset, *g.mu);
        REQUIRE(r.members.size() == 2);
        CHECK(intersect(r.members) == g.poset);
        check_realizer(g.poset, r);
    }
    SUBCASE("modulus-sign grid") {
        auto g = theorem12(3);
        auto r = realizer_from_multi_utility(g.poset, *g.mu);
        REQUIRE(r.members.size() == 2);
        CHECK(intersect(r.members) == g.poset);
    }
}

TEST_CASE("realizer and injective multi-utility round trips") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Poset p = testing::random_poset(rng, 8);
        auto mu = testing::random_multi_utility(rng, p, 2 + trial % 3);
        auto r = realizer_from_multi_utility(p, mu);
        auto inj = realizer_to_injective_multi_utility(p, r);
        CHECK(validate_representation(p, inj).kind == ReprKind::Injective);
        auto r2 = injective_multi_utility_to_realizer(p, inj);
        REQUIRE(r2.members.size() == r.members.size());
        for (std::size_t i = 0; i < r.members.size(); ++i)
            CHECK(r2.members[i] == r.members[i]);
        auto inj2 = realizer_to_injective_multi_utility(p, r2);
        // values may differ; induced orders must not
        for (std::size_t i = 0; i < inj.rows.size(); ++i)
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = 0; b < p.size(); ++b)
                    CHECK((inj.rows[i][a] < inj.rows[i][b]) == (inj2.rows[i][a] < inj2.rows[i][b]));
    }
    SUBCASE("kind gates") {
        Poset p = Poset::antichain({"a", "b"});
        MultiUtility plain;
        plain.rows = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        CHECK_NOTHROW(injective_multi_utility_to_realizer(p, plain)); // rows happen to be injective
        MultiUtility tied;
        tied.rows = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
        CHECK_THROWS_AS(injective_multi_utility_to_realizer(p, tied), Error);
    }
}

TEST_CASE("strictify_multi_utility") {
    SUBCASE("modulus-sign rows become strict") {
        auto g = theorem12(4);
        auto v = strictify_multi_utility(g.poset, *g.mu, Rational(1));
        CHECK(v.rows.size() == g.mu->rows.size());
        auto rep = validate_representation(g.poset, v);
        CHECK(rep.kind >= ReprKind::Strict);
        // strictly finer rows
        for (std::size_t i = 0; i < v.rows.size(); ++i)
            for (std::size_t a = 0; a < g.poset.size(); ++a)
                for (std::size_t b = 0; b < g.poset.size(); ++b)
                    if (g.mu->rows[i][a] < g.mu->rows[i][b]) CHECK(v.rows[i][a] < v.rows[i][b]);
    }
    SUBCASE("already-strict table stays strict") {
        auto spec = FamilySpec{};
        spec.family = Family::Prop14Grid;
        spec.k = 3;
        auto g = generate(spec);
        CHECK(validate_representation(g.poset, *g.mu).kind >= ReprKind::Strict);
        auto v = strictify_multi_utility(g.poset, *g.mu, Rational(1, 7));
        CHECK(validate_representation(g.poset, v).kind >= ReprKind::Strict);
    }
    SUBCASE("non-table input is rejected") {
        Poset p = Poset::antichain({"a", "b"});
        MultiUtility one;
        one.rows = {{Rational(0), Rational(1)}};
        CHECK_THROWS_AS(strictify_multi_utility(p, one, Rational(1)), Error);
    }
}
