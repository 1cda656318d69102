#include <catch2/catch_amalgamated.hpp>

#include "toric/io.hpp"

using namespace toric;

namespace {
Vec v2(long a, long b) { return Vec{Int(a), Int(b)}; }
}

TEST_CASE("line-format fan input") {
    std::string text =
        "# a comment\n"
        "rank 2\n"
        "rays\n"
        "1 0\n"
        "0 1\n"
        "-1 -1\n"
        "cones\n"
        "0 1\n"
        "1 2\n"
        "0 2\n";
    InputObject in = parse_input(text, "inline");
    REQUIRE(std::holds_alternative<Fan>(in));
    const Fan& f = std::get<Fan>(in);
    CHECK(f.rank() == 2);
    CHECK(f.is_complete());
    CHECK(f.maximal_cones().size() == 3);
}

TEST_CASE("json fan input accepts numbers and strings") {
    std::string text = R"({"rank": "2", "rays": [[1,0],["0","1"],[-1,-1]],
                           "cones": [[0,1],[1,2],[0,2]]})";
    InputObject in = parse_input(text, "inline");
    REQUIRE(std::holds_alternative<Fan>(in));
    CHECK(std::get<Fan>(in).is_complete());
}

TEST_CASE("polytope input") {
    std::string text = "rank 2\nvertices\n0 0\n2 0\n0 2\n";
    InputObject in = parse_input(text, "inline");
    REQUIRE(std::holds_alternative<LatticePolytope>(in));
    CHECK(std::get<LatticePolytope>(in).vertices().size() == 3);
}

TEST_CASE("parse errors carry positions") {
    std::string bad = "rank 2\nrays\n1 zebra\n";
    CHECK_THROWS_WITH(parse_input(bad, "f.fan"),
                      Catch::Matchers::ContainsSubstring("f.fan:3"));
    CHECK_THROWS_WITH(parse_input("rays\n1 0\n", "g.fan"),
                      Catch::Matchers::ContainsSubstring("rank"));
    CHECK_THROWS_WITH(parse_input("rank 2\nrays\n1 0 0\n", "h.fan"),
                      Catch::Matchers::ContainsSubstring("h.fan:3"));
    // mixed sections cannot be classified
    CHECK_THROWS_AS(parse_input("rank 1\nrays\n1\nvertices\n0\n", "m"), ParseError);
}

TEST_CASE("fan serialization round-trips through both formats") {
    Fan f = Fan::from_maximal_cones(2, {v2(1, 0), v2(0, 1), v2(-1, -2)},
                                    {{0, 1}, {1, 2}, {0, 2}});
    std::string text = fan_to_text(f);
    InputObject in = parse_input(text, "roundtrip");
    CHECK(std::get<Fan>(in) == f);

    Json j = fan_to_json(f);
    InputObject in2 = parse_input(j.dump(), "roundtrip-json");
    CHECK(std::get<Fan>(in2) == f);
}

TEST_CASE("genfun serialization shape") {
    RationalGenFun g(LaurentPoly::constant(Rat(1), 2), {v2(0, 1), v2(1, 0)});
    Json j = to_json(g);
    CHECK(j["denominator"].size() == 2);
    CHECK(j["numerator"][0]["coeff"] == "1");
    CHECK(pretty_genfun(g) == "(1) / ((1-e^(0,1)) (1-e^(1,0)))");
    CHECK(pretty_genfun(RationalGenFun::zero(2)) == "0");
}

TEST_CASE("big integers serialize as strings, small ones as numbers") {
    CHECK(to_json(Int(42)).is_number_integer());
    Int big = Int("123456789012345678901234567890");
    CHECK(to_json(big).is_string());
    CHECK(to_json(big).get<std::string>() == "123456789012345678901234567890");
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
}
