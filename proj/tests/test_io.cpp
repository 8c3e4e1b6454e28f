#include <doctest.h>

#include <random>

#include "ordim/dot.hpp"
#include "ordim/extension.hpp"
#include "ordim/generators.hpp"
#include "ordim/json_io.hpp"
#include "support/random_poset.hpp"

using namespace ordim;

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(to_string(Rational(5, 4)) == "5/4");
    CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("poset JSON round trips bit-exactly for every family") {
    std::vector<FamilySpec> specs;
    for (Family f : {Family::Figure1, Family::Prop2Grid, Family::Prop2Extension,
                     Family::Theorem12Grid, Family::Prop14Grid, Family::StandardExample,
                     Family::MajorizationGrid, Family::LexGrid}) {
        FamilySpec s;
        s.family = f;
        s.k = 3;
        s.n = 3;
        s.denom = 6;
        s.a = 2;
        s.b = 2;
        specs.push_back(s);
    }
    for (const auto& s : specs) {
        Poset p = generate(s).poset;
        auto j = poset_to_json(p);
        Poset q = poset_from_json(j);
        CHECK(q == p);
        CHECK(poset_to_json(q) == j);
    }
}

TEST_CASE("poset JSON rejects malformed input") {
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::array()), Error);
    CHECK_THROWS_AS(poset_from_json({{"labels", {"a"}}}), Error);
    auto cyc = nlohmann::json::parse(R"({"labels":["a","b"],"cover":[["a","b"],["b","a"]]})");
    CHECK_THROWS_WITH_AS(poset_from_json(cyc), doctest::Contains("CycleDetected"), Error);
}

TEST_CASE("multi-utility JSON round trip") {
    MultiUtility mu;
    mu.rows = {{Rational(1, 3), Rational(-2)}, {Rational(0), Rational(7, 5)}};
    mu.kind = ReprKind::Strict;
    auto j = multi_utility_to_json(mu);
    auto back = multi_utility_from_json(j);
    CHECK(back.rows == mu.rows);
    CHECK(back.kind == mu.kind);
    CHECK_THROWS_AS(multi_utility_from_json(nlohmann::json::array()), Error);
}

TEST_CASE("realizer JSON round trip") {
    std::mt19937 rng(3);
    Poset p = testing::random_poset(rng, 7);
    auto mu = testing::random_multi_utility(rng, p, 3);
    auto r = realizer_from_multi_utility(p, mu);
    auto j = realizer_to_json(r);
    auto back = realizer_from_json(j, p.labels());
    REQUIRE(back.members.size() == r.members.size());
    for (std::size_t i = 0; i < r.members.size(); ++i) CHECK(back.members[i] == r.members[i]);
    CHECK_THROWS_AS(realizer_from_json(j, std::vector<std::string>{"a"}), Error);
}

TEST_CASE("trace JSON carries witnesses and added pairs") {
    Poset p = generate({Family::Figure1}).poset;
    auto t = debreu_extension_from_dense(p, {"D", "A", "E"});
    auto j = trace_to_json(t);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["index"] == 1);
    CHECK(j[0]["witness"] == "D");
    CHECK(j[0]["added_pairs"].size() == 7);
    CHECK(j[2]["added_pairs"].empty());
}

TEST_CASE("certificate JSON shape") {
    Poset p = Poset::antichain({"a", "b", "c"});
    auto c = dimension(p);
    auto j = certificate_to_json(c);
    CHECK(j["value"] == 2);
    CHECK(j["exact"] == true);
    CHECK(j["kind"] == "dushnik_miller");
    CHECK(j["realizer"].size() == 2);
}

TEST_CASE("DOT output") {
    SUBCASE("single element") {
        std::string dot = dot_hasse(Poset::from_cover_relations({"a"}, {}));
        CHECK(dot.find("\"a\";") != std::string::npos);
        CHECK(dot.find("->") == std::string::npos);
    }
    SUBCASE("chain keeps only cover edges") {
        std::string dot = dot_hasse(Poset::chain({"a", "b", "c"}));
        CHECK(dot.find("\"a\" -> \"b\";") != std::string::npos);
        CHECK(dot.find("\"b\" -> \"c\";") != std::string::npos);
        CHECK(dot.find("\"a\" -> \"c\"") == std::string::npos);
    }
    SUBCASE("byte-identical across runs") {
        Poset p = generate({Family::Figure1}).poset;
        CHECK(dot_hasse(p) == dot_hasse(p));
        auto t = debreu_extension_from_dense(p, {"D", "A", "E"});
        auto a = dot_trace_panels(t);
        auto b = dot_trace_panels(t);
        CHECK(a == b);
        REQUIRE(a.size() == 4);
        CHECK(a[1].find("color=red") != std::string::npos); // step 1 adds pairs
        CHECK(a[3].find("color=red") == std::string::npos); // step 3 is a no-op
    }
}
