#pragma once

#include <string>
#include <vector>

#include "sdl/graph.hpp"

namespace sdl {

/// Labeling-invariant key: the graph6 encoding of the relabeling whose
/// upper-triangle bit string (graph6 bit order) is lexicographically
/// minimal over all vertex permutations. Brute force, capped at n <= 10.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, sorted by canonical key. Each returned graph is its own
/// canonical representative, so graph6_write(g) == canonical_form(g).
/// Capped at n <= 7; beyond that, ingest a graph6 corpus file instead.
std::vector<Graph> enumerate_connected(int n);

}  // namespace sdl
