#include <doctest.h>

#include "dcoc/errors.hpp"
#include "dcoc/generators.hpp"
#include "dcoc/io.hpp"
#include "dcoc/rng.hpp"
#include "test_support.hpp"

using namespace dcoc;

TEST_CASE("reader accepts comments and blank lines") {
    const std::string text =
        "# a triangle\n"
        "3 3\n"
        "\n"
        "0 1\n"
        "# middle comment\n"
        "1 2\n"
        "2 0\n";
    Digraph d = parse_edge_list(text);
    CHECK(d.n() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(2, 0));
}

TEST_CASE("reader rejects malformed inputs") {
    CHECK_THROWS_AS(parse_edge_list(""), Error);
    CHECK_THROWS_AS(parse_edge_list("2\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), Error);      // loop
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n0 1\n"), Error); // duplicate
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), Error);      // range
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), Error);      // short
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n1 0\n"), Error); // trailing
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 9\n"), Error);    // extra token

    try {
        parse_edge_list("2 1\nx y\n");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == "parse");
    }
}

TEST_CASE("round-trip is exact: graph-wise once, byte-wise after") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(10));
        Digraph d = test::random_digraph(n, rng, 1, 2);
        std::string bytes = edge_list_string(d);
        Digraph back = parse_edge_list(bytes);
        CHECK(back == d);
        CHECK(edge_list_string(back) == bytes);
    }
}

TEST_CASE("digest is stable per graph and changes across graphs") {
    Digraph a = gen::random_tournament(8, 1);
    Digraph b = gen::random_tournament(8, 1);
    Digraph c = gen::random_tournament(8, 2);
    CHECK(edge_list_digest(a) == edge_list_digest(b));
    CHECK(edge_list_digest(a) != edge_list_digest(c));
}

TEST_CASE("empty digraph round-trips") {
    Digraph d = parse_edge_list("0 0\n");
    CHECK(d.n() == 0);
    CHECK(edge_list_string(d) == "0 0\n");
}
