#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sdl/errors.hpp"
#include "sdl/linalg.hpp"

namespace sdl {

using VertexId = int;

/// Simple undirected graph on vertices 0..n-1. The adjacency is a symmetric
/// boolean matrix with zero diagonal, so loops and multi-edges cannot be
/// represented.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const;
    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);

    int degree(VertexId v) const;
    std::vector<VertexId> neighborhood(VertexId v) const;

    /// G - v; remaining vertices are relabeled order-preservingly.
    Graph delete_vertex(VertexId v) const;

    /// Induced subgraph on the given strictly increasing vertex list.
    Graph induced(std::span<const VertexId> vertices) const;

    bool is_connected() const;

    /// Vertex of minimum degree, ties broken by lowest index.
    VertexId min_degree_vertex() const;

    SymMatrix adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint8_t> adj_;  // n*n, symmetric, zero diagonal
};

/// F = G[{v} union N(v)], the subgraph induced by the closed neighborhood.
Graph closed_neighborhood_subgraph(const Graph& g, VertexId v);

// Named families.
Graph complete(int n);   // K_n, n >= 1
Graph star(int n);       // K_{1,n-1} on n vertices, center = vertex 0, n >= 2
Graph path(int n);       // P_n, n >= 1
Graph cycle(int n);      // C_n, n >= 3

/// xorshift64* stream. This is the exact generator promised by the docs so
/// that random corpora are reproducible across implementations:
///   state s (64-bit); a seed of 0 is replaced by 0x9E3779B97F4A7C15
///   next():  s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
///            return s * 0x2545F4914F6CDD1D
///   next_double(): (next() >> 11) * 2^-53, uniform in [0, 1)
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    double next_double() { return (next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// G(n, p) sample. Pairs (i, j), i < j are visited in row-major order
/// ((0,1), (0,2), ..., (0,n-1), (1,2), ...) and each edge is included iff
/// the next uniform draw is < p. Deterministic given the seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Structure predicates used by the equality characterization.
bool is_complete(const Graph& g);
/// Exactly one vertex of degree n-1 and all others of degree 1 (n >= 3).
bool is_star(const Graph& g);

}  // namespace sdl
