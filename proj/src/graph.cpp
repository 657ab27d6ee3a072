#include "sdl/graph.hpp"

#include <algorithm>
#include <string>

namespace sdl {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw PreconditionError("Graph: n must be >= 1");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("Graph: vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j)
        throw PreconditionError("Graph: self-loop at vertex " + std::to_string(i));
    adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

int Graph::edge_count() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m += adj_[static_cast<std::size_t>(i) * n_ + j];
    return m;
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    int d = 0;
    for (int j = 0; j < n_; ++j) d += adj_[static_cast<std::size_t>(v) * n_ + j];
    return d;
}

std::vector<VertexId> Graph::neighborhood(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (int j = 0; j < n_; ++j)
        if (adj_[static_cast<std::size_t>(v) * n_ + j]) out.push_back(j);
    return out;
}

Graph Graph::delete_vertex(VertexId v) const {
    check_vertex(v);
    if (n_ == 1)
        throw PreconditionError("delete_vertex: cannot delete the last vertex");
    Graph g(n_ - 1);
    for (int i = 0; i < n_; ++i) {
        if (i == v) continue;
        int ii = i < v ? i : i - 1;
        for (int j = i + 1; j < n_; ++j) {
            if (j == v) continue;
            int jj = j < v ? j : j - 1;
            if (adj_[static_cast<std::size_t>(i) * n_ + j]) g.add_edge(ii, jj);
        }
    }
    return g;
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
    if (vertices.empty())
        throw PreconditionError("induced: vertex list must be nonempty");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        check_vertex(vertices[k]);
        if (k > 0 && vertices[k] <= vertices[k - 1])
            throw PreconditionError("induced: vertex list must be strictly increasing");
    }
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (has_edge(vertices[a], vertices[b]))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int j = 0; j < n_; ++j) {
            if (adj_[static_cast<std::size_t>(u) * n_ + j] && !seen[j]) {
                seen[j] = 1;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == n_;
}

VertexId Graph::min_degree_vertex() const {
    int best = 0;
    int best_deg = degree(0);
    for (int v = 1; v < n_; ++v) {
        int d = degree(v);
        if (d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

SymMatrix Graph::adjacency() const {
    SymMatrix a(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[static_cast<std::size_t>(i) * n_ + j]) a.set(i, j, 1.0);
    return a;
}

Graph closed_neighborhood_subgraph(const Graph& g, VertexId v) {
    auto nbrs = g.neighborhood(v);
    nbrs.push_back(v);
    std::sort(nbrs.begin(), nbrs.end());
    return g.induced(nbrs);
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int n) {
    if (n < 2) throw PreconditionError("star: need n >= 2");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw PreconditionError("erdos_renyi: p must be in [0, 1]");
    Graph g(n);
    Xorshift64Star rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge(i, j);
    return g;
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != g.n() - 1) return false;
    return true;
}

bool is_star(const Graph& g) {
    if (g.n() < 3) return false;
    int centers = 0, leaves = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == g.n() - 1)
            ++centers;
        else if (d == 1)
            ++leaves;
        else
            return false;
    }
    return centers == 1 && leaves == g.n() - 1;
}

}  // namespace sdl
