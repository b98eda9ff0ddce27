#include <doctest.h>

#include "flatcover/format.hpp"
#include "flatcover/hypergraph.hpp"

using namespace flatcover;

TEST_CASE("parse_hg") {
    SUBCASE("running example") {
        Hypergraph h = parse_hg("p hg 4 3\ne 1 2\ne 2 3\ne 3 4\n");
        CHECK(h.n == 4);
        CHECK(h.edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    }
    SUBCASE("empty edge") {
        Hypergraph h = parse_hg("p hg 1 1\ne\n");
        CHECK(h.n == 1);
        CHECK(h.edges == std::vector<Edge>{{}});
    }
    SUBCASE("comments skipped") {
        Hypergraph h = parse_hg("c hello\np hg 2 1\nc mid\ne 1 2\n");
        CHECK(h.edges == std::vector<Edge>{{1, 2}});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_hg("p xx 1 1\ne 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hg("p hg 2 1\ne 3\n"), ParseError);
        CHECK_THROWS_AS(parse_hg("p hg 2 1\ne 2 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hg("p hg 2 1\ne 1 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hg("p hg 2 2\ne 1\n"), ParseError);
        CHECK_THROWS_AS(parse_hg(""), ParseError);
    }
}

TEST_CASE("serialize/parse round trip") {
    const std::string canonical = "p hg 4 3\ne 1 2\ne 2 3\ne 3 4\n";
    CHECK(serialize_hg(parse_hg(canonical)) == canonical);
    const std::string with_empty = "p hg 2 2\ne\ne 1 2\n";
    CHECK(serialize_hg(parse_hg(with_empty)) == with_empty);
}

TEST_CASE("cover certificates") {
    Cover c{{1, 3}};
    const std::string text = serialize_cover(c);
    CHECK(text == "s cover 2\ni 1\ni 3\n");
    CHECK(parse_cover(text).edge_indices == std::vector<int>{1, 3});
    CHECK(parse_cover("s cover 0\n").edge_indices.empty());
    CHECK_THROWS_AS(parse_cover("s cover 2\ni 1\n"), ParseError);
    CHECK_THROWS_AS(parse_cover("bogus\n"), ParseError);
}

TEST_CASE("trace serialization") {
    GroupTrace trace;
    trace.steps.push_back({{3, 4}, 3, {0, 1, 2}, {0, 1, 2}});
    CHECK(serialize_trace(trace) == "g 2 3 : 3 4 ; 1:1 2:2 3:3\n");
}
