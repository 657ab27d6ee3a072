#include <doctest.h>

#include <utility>
#include <vector>

#include "sdl/enumerate.hpp"
#include "sdl/graph.hpp"
#include "sdl/graph6.hpp"
#include "sdl/linalg.hpp"

using namespace sdl;

TEST_SUITE("graph") {

TEST_CASE("from_edges") {
    std::vector<std::pair<int, int>> p3{{0, 1}, {1, 2}};
    Graph g = Graph::from_edges(3, p3);
    CHECK(g == path(3));

    std::vector<std::pair<int, int>> none;
    CHECK(Graph::from_edges(2, none).edge_count() == 0);

    std::vector<std::pair<int, int>> k4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
    CHECK(Graph::from_edges(4, k4) == complete(4));

    std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), PreconditionError);
    std::vector<std::pair<int, int>> oob{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, oob), PreconditionError);
    CHECK_THROWS_AS(Graph(0), PreconditionError);
}

TEST_CASE("delete_vertex") {
    CHECK(cycle(4).delete_vertex(0) == path(3));
    CHECK(complete(4).delete_vertex(2) == complete(3));
    CHECK(star(4).delete_vertex(0) == Graph(3));  // center removal isolates the leaves
    CHECK_THROWS_AS(Graph(1).delete_vertex(0), PreconditionError);
}

TEST_CASE("neighborhood and degree") {
    Graph s = star(4);
    CHECK(s.neighborhood(0) == std::vector<VertexId>{1, 2, 3});
    CHECK(s.degree(0) == 3);
    CHECK(path(3).neighborhood(0) == std::vector<VertexId>{1});
    CHECK(path(3).degree(0) == 1);
    CHECK(cycle(5).neighborhood(2) == std::vector<VertexId>{1, 3});
    CHECK(cycle(5).degree(2) == 2);
}

TEST_CASE("closed neighborhood subgraph") {
    // C_5 at any vertex: v plus its two nonadjacent neighbors form P_3.
    CHECK(canonical_form(closed_neighborhood_subgraph(cycle(5), 0)) ==
          canonical_form(path(3)));
    CHECK(closed_neighborhood_subgraph(complete(5), 3) == complete(5));
    CHECK(closed_neighborhood_subgraph(star(4), 1) == path(2));  // leaf: K_2
}

TEST_CASE("closed neighborhood identities over the n <= 6 sweep") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            SymMatrix b_adj(1);
            for (int v = 0; v < n; ++v) {
                Graph f = closed_neighborhood_subgraph(g, v);
                int d = g.degree(v);
                CHECK(f.n() == d + 1);

                // b^T B b against the indicator of N(v) in G - v.
                Graph h = g.delete_vertex(v);
                std::vector<double> b(h.n(), 0.0);
                for (VertexId u : g.neighborhood(v)) b[u < v ? u : u - 1] = 1.0;
                double btbb = quadratic_form(h.adjacency(), b);
                CHECK(2 * f.edge_count() == doctest::Approx(2 * d + btbb));
            }
        }
    }
}

TEST_CASE("delete_vertex drops degree(v) edges over the n <= 6 sweep") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for (int v = 0; v < n; ++v) {
                Graph h = g.delete_vertex(v);
                CHECK(h.n() == n - 1);
                CHECK(h.edge_count() == g.edge_count() - g.degree(v));
            }
        }
    }
}

TEST_CASE("connectivity, edge count, min degree vertex") {
    Graph g(5);  // K_3 + K_2
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    CHECK_FALSE(g.is_connected());
    CHECK(g.edge_count() == 4);
    CHECK(g.min_degree_vertex() == 3);

    CHECK(cycle(6).is_connected());
    CHECK(cycle(6).edge_count() == 6);
    CHECK(cycle(6).min_degree_vertex() == 0);  // all tie at degree 2

    CHECK(star(5).is_connected());
    CHECK(star(5).edge_count() == 4);
    CHECK(star(5).min_degree_vertex() == 1);  // first leaf
}

TEST_CASE("families") {
    CHECK(complete(4).edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(complete(4).degree(v) == 3);

    CHECK(star(5).degree(0) == 4);
    for (int v = 1; v < 5; ++v) CHECK(star(5).degree(v) == 1);

    CHECK(path(1).edge_count() == 0);
    CHECK(cycle(3) == complete(3));
    CHECK_THROWS_AS(cycle(2), PreconditionError);
    CHECK_THROWS_AS(star(1), PreconditionError);
}

TEST_CASE("erdos_renyi is deterministic and honors p = 0, 1") {
    CHECK(erdos_renyi(10, 0.0, 5) == Graph(10));
    CHECK(erdos_renyi(6, 1.0, 5) == complete(6));
    CHECK(erdos_renyi(12, 0.4, 99) == erdos_renyi(12, 0.4, 99));
    CHECK(erdos_renyi(12, 0.4, 99) != erdos_renyi(12, 0.4, 100));
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), PreconditionError);
}

TEST_CASE("structure predicates") {
    CHECK(is_complete(complete(5)));
    CHECK(is_complete(path(2)));  // K_2
    CHECK_FALSE(is_complete(cycle(4)));
    CHECK(is_star(star(4)));
    CHECK(is_star(path(3)));  // P_3 = K_{1,2}
    CHECK_FALSE(is_star(path(4)));
    CHECK_FALSE(is_star(complete(4)));
}

}  // TEST_SUITE
