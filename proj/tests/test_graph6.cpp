#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sdl/enumerate.hpp"
#include "sdl/graph6.hpp"

using namespace sdl;

TEST_SUITE("graph6") {

TEST_CASE("fixed vectors") {
    CHECK(graph6_write(complete(3)) == "Bw");
    CHECK(graph6_write(complete(4)) == "C~");
    CHECK(graph6_write(path(3)) == "Bg");
    CHECK(graph6_parse("Bw") == complete(3));
    CHECK(graph6_parse("C~") == complete(4));
    CHECK(graph6_parse("Bg") == path(3));
    CHECK(graph6_parse("@") == Graph(1));
    CHECK(graph6_write(Graph(1)) == "@");
}

TEST_CASE("header stripping and line endings") {
    CHECK(graph6_parse(">>graph6<<Bw") == complete(3));
    CHECK(graph6_parse("Bw\r\n") == complete(3));
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(graph6_parse(""), Graph6ParseError);
    CHECK_THROWS_AS(graph6_parse("@@"), Graph6ParseError);      // trailing payload
    CHECK_THROWS_AS(graph6_parse("C"), Graph6ParseError);       // truncated
    CHECK_THROWS_AS(graph6_parse("?"), Graph6ParseError);       // n = 0
    CHECK_THROWS_AS(graph6_parse("~??"), Graph6ParseError);     // long format
    CHECK_THROWS_AS(graph6_parse("B "), Graph6ParseError);      // byte below 63
    CHECK_THROWS_AS(graph6_parse("Bz"), Graph6ParseError);      // nonzero padding
    CHECK_THROWS_AS(graph6_write(Graph(63)), LimitError);
}

TEST_CASE("round trip on every enumerated graph") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(graph6_parse(graph6_write(g)) == g);
}

TEST_CASE("round trip on random graphs up to n = 40") {
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + trial % 40;
        double p = (trial % 11) / 10.0;
        Graph g = erdos_renyi(n, p, 1000 + trial);
        CHECK(graph6_parse(graph6_write(g)) == g);
    }
}

TEST_CASE("file ingestion") {
    auto dir = std::filesystem::temp_directory_path();
    auto good = (dir / "sdl_g6_good.g6").string();
    {
        std::ofstream out(good);
        out << ">>graph6<<Bw\n\nC~\nBg\n";
    }
    auto graphs = graph6_read_file(good);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == complete(3));
    CHECK(graphs[1] == complete(4));
    CHECK(graphs[2] == path(3));
    std::remove(good.c_str());

    auto bad = (dir / "sdl_g6_bad.g6").string();
    {
        std::ofstream out(bad);
        out << "Bw\n@@\n";
    }
    CHECK_THROWS_WITH_AS(graph6_read_file(bad),
                         doctest::Contains(":2:"), Graph6ParseError);
    std::remove(bad.c_str());

    CHECK_THROWS_AS(graph6_read_file("/nonexistent/sdl.g6"), IoError);
}

}  // TEST_SUITE
