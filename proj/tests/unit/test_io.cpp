#include <doctest.h>

#include "glindex/io.hpp"

using namespace glindex;

TEST_CASE("ideal documents")
{
    auto parsed = parse_input(R"({"vars": 3, "generators": [[1,1,0],[0,1,1],[1,1,1]]})");
    REQUIRE(std::holds_alternative<IdealInput>(parsed));
    const auto& in = std::get<IdealInput>(parsed);
    CHECK(in.ideal.size() == 2);
    CHECK_FALSE(in.was_minimal);
    CHECK(ideal_to_json(in.ideal) == R"({"generators":[[0,1,1],[1,1,0]],"vars":3})");
    CHECK(parse_ideal(R"({"vars": 2, "generators": [[1,0]]})").was_minimal);
}

TEST_CASE("clutter documents")
{
    auto c = parse_clutter(R"({"n": 4, "d": 2, "circuits": [[3,4],[1,2]]})");
    CHECK(c.size() == 2);
    CHECK(clutter_to_json(c) == R"({"circuits":[[1,2],[3,4]],"d":2,"n":4})");
    auto as_ideal = parse_ideal(R"({"n": 4, "d": 2, "circuits": [[1,2]]})");
    CHECK(as_ideal.ideal.size() == 1);
}

TEST_CASE("malformed and ambiguous documents are rejected")
{
    CHECK_THROWS_AS(parse_input("not json"), InputError);
    CHECK_THROWS_AS(parse_input("[1, 2]"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"vars": 2, "generators": [[1,0]], "n": 2})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"something": 1})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"vars": 2, "generators": [[1,0,0]]})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"vars": 2, "generators": "x"})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"n": 3, "d": 2, "circuits": [[1,4]]})"), InputError);
    CHECK_THROWS_AS(parse_input(R"({"n": 3, "d": 2})"), InputError);
    CHECK_THROWS_AS(parse_clutter(R"({"vars": 2, "generators": [[1,0]]})"), InputError);
}

TEST_CASE("betti and presentation encodings")
{
    auto ideal = parse_ideal(R"({"vars": 2, "generators": [[1,0],[0,1]]})").ideal;
    CHECK(betti_to_json(betti_table(ideal)) ==
          R"({"graded":[[0,1,2],[1,2,1]],"multigraded":[[0,[0,1],1],[0,[1,0],1],[1,[1,1],1]]})");
    CHECK(presentation_to_json(linearly_presented_graph(ideal), ideal) == R"({"linearly_presented":true,"witness":null})");
    auto split = parse_ideal(R"({"vars": 4, "generators": [[1,1,0,0],[0,0,1,1]]})").ideal;
    CHECK(presentation_to_json(linearly_presented_graph(split), split) ==
          R"({"linearly_presented":false,"witness":{"path":null,"u":[0,0,1,1],"v":[1,1,0,0]}})");
}
