#include <doctest.h>

#include "ecclab/enumerate.hpp"
#include "ecclab/graph6.hpp"

using namespace ecclab;

TEST_CASE("parse_graph6 known strings") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    // 'D~{' is K5 (all 10 bits set)
    Graph k5 = parse_graph6("D~{");
    CHECK(k5.order() == 5);
    CHECK(k5.size() == 10);
    CHECK(encode_graph6(k5) == "D~{");

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.order() == 3);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    // reference encoding of K6 (from nauty's format spec)
    Graph k6 = parse_graph6("E~~w");
    CHECK(k6.order() == 6);
    CHECK(k6.size() == 15);

    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6("@").order() == 1);

    // optional file header prefix and trailing newline
    CHECK(parse_graph6(">>graph6<<A_").size() == 1);
    CHECK(parse_graph6("A_\n").size() == 1);
}

TEST_CASE("encode_graph6 known strings") {
    Graph k6 = complete_multipartite({1, 1, 1, 1, 1, 1});
    CHECK(encode_graph6(k6) == "E~~w");
    Graph k2 = complete_multipartite({1, 1});
    CHECK(encode_graph6(k2) == "A_");
    CHECK(encode_graph6(Graph(0)) == "?");
}

TEST_CASE("encode_graph6 rejects long-form orders") {
    CHECK_THROWS_AS(encode_graph6(Graph(63)), DomainError);
}

TEST_CASE("parse_graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);   // long form opener
    CHECK_THROWS_AS(parse_graph6("E~~"), ParseError);   // truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), ParseError);   // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError); // data byte below 63
    CHECK_THROWS_AS(parse_graph6("\x01_"), ParseError); // header byte below 63

    try {
        parse_graph6("A_X");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);  // the garbage byte
    }
}

TEST_CASE("graph6 round trip on the small-graph corpus") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Graph back = parse_graph6(encode_graph6(g));
            CHECK(back.order() == g.order());
            CHECK(back.edges() == g.edges());
        }
    }
}
