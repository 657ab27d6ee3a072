#include "sdl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sdl {

namespace {

void require_non_isolated(const Graph& g, VertexId v) {
    if (g.degree(v) < 1)
        throw PreconditionError("vertex " + std::to_string(v) +
                                " is isolated; the deletion bound needs d(v) >= 1");
}

// Indicator vector of N(v) in the vertex order of G - v.
std::vector<double> neighbor_indicator(const Graph& g, VertexId v) {
    std::vector<double> b(g.n() - 1, 0.0);
    for (VertexId u : g.neighborhood(v)) b[u < v ? u : u - 1] = 1.0;
    return b;
}

// 2 e(G[N(v)]) by direct edge counting.
long neighborhood_edge_sum(const Graph& g, VertexId v) {
    auto nbrs = g.neighborhood(v);
    long edges = 0;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
            if (g.has_edge(nbrs[a], nbrs[b])) ++edges;
    return 2 * edges;
}

}  // namespace

DeletionReport deletion_report(const Graph& g, VertexId v, const Tolerances& tol) {
    if (g.n() < 2)
        throw PreconditionError("deletion_report: need n >= 2");
    require_non_isolated(g, v);

    DeletionReport rep;
    rep.degree = g.degree(v);
    rep.lambda = spectral_radius(g.adjacency(), tol.eigen_tol);
    rep.mu = spectral_radius(g.delete_vertex(v).adjacency(), tol.eigen_tol);
    rep.bound = std::sqrt(rep.mu * rep.mu + 2.0 * rep.degree - 1.0);
    rep.gap = rep.bound - rep.lambda;
    rep.squared_gap = 2.0 * rep.degree - 1.0 - (rep.lambda * rep.lambda - rep.mu * rep.mu);
    rep.equality = std::abs(rep.gap) < tol.eq_tol;
    return rep;
}

Certificate proof_certificate(const Graph& g, VertexId v, const Tolerances& tol) {
    if (g.n() < 2)
        throw PreconditionError("proof_certificate: need n >= 2");
    require_non_isolated(g, v);

    Certificate cert;
    cert.degree = g.degree(v);
    const Graph h = g.delete_vertex(v);
    const SymMatrix b_adj = h.adjacency();
    cert.lambda = spectral_radius(g.adjacency(), tol.eigen_tol);
    cert.mu = spectral_radius(b_adj, tol.eigen_tol);

    const auto b = neighbor_indicator(g, v);
    const int d = cert.degree;

    cert.nbhd_edge_sum = neighborhood_edge_sum(g, v);
    // The same quantity as a quadratic form; the identity b^T B b = 2e(G[N(v)])
    // is part of what the certificate vouches for.
    double qf = quadratic_form(b_adj, b);
    if (std::abs(qf - static_cast<double>(cert.nbhd_edge_sum)) > 1e-6)
        throw Error("proof_certificate: b^T B b = " + std::to_string(qf) +
                    " disagrees with 2 e(G[N(v)]) = " + std::to_string(cert.nbhd_edge_sum));

    cert.avg_deg_F = (2.0 * d + cert.nbhd_edge_sum) / (d + 1.0);
    {
        // Closed-neighborhood identities |V(F)| = d+1, 2e(F) = 2d + b^T B b.
        Graph f = closed_neighborhood_subgraph(g, v);
        if (f.n() != d + 1 || 2 * f.edge_count() != 2 * d + cert.nbhd_edge_sum)
            throw Error("proof_certificate: closed neighborhood bookkeeping mismatch");
    }
    if (d >= 2)
        cert.avg_deg_margin = 2.0 * (static_cast<double>(d) * (d - 1) - cert.nbhd_edge_sum) /
                         (static_cast<double>(d) * d - 1.0);
    cert.m_leq_lambda_dm1 =
        static_cast<double>(cert.nbhd_edge_sum) <= cert.lambda * (d - 1) + tol.num_tol;

    cert.degenerate = (cert.lambda - cert.mu) <= tol.degeneracy;
    if (cert.degenerate) return cert;

    const int nh = h.n();
    const double lambda = cert.lambda, mu = cert.mu;
    const double denom = lambda * lambda - mu * mu;

    // lambda I - B is positive definite here; Schur step lambda = b^T (lambda I - B)^-1 b.
    SymMatrix shifted(nh);
    for (int i = 0; i < nh; ++i) {
        shifted.set(i, i, lambda);
        for (int j = i + 1; j < nh; ++j) shifted.set(i, j, -b_adj(i, j));
    }
    auto x = solve_spd(shifted, b);
    double schur_value = 0.0;
    for (int i = 0; i < nh; ++i) schur_value += b[i] * x[i];
    cert.schur_residual = std::abs(lambda - schur_value);

    // M = (lambda I + B)/(lambda^2 - mu^2) - (lambda I - B)^-1, assembled
    // explicitly with the inverse taken column by column.
    std::vector<std::vector<double>> inv(nh);
    {
        std::vector<double> e(nh, 0.0);
        for (int j = 0; j < nh; ++j) {
            e[j] = 1.0;
            inv[j] = solve_spd(shifted, e);
            e[j] = 0.0;
        }
    }
    SymMatrix m(nh);
    for (int i = 0; i < nh; ++i) {
        for (int j = i; j < nh; ++j) {
            double lhs = ((i == j ? lambda : 0.0) + b_adj(i, j)) / denom;
            m.set(i, j, lhs - 0.5 * (inv[j][i] + inv[i][j]));
        }
    }
    cert.m_min_eig = min_eigenvalue(m, tol.eigen_tol);
    cert.btMb = quadratic_form(m, b);
    cert.identity_lhs = (lambda * d + cert.nbhd_edge_sum) / denom - lambda;
    return cert;
}

bool equality_characterization(const Graph& g, VertexId v) {
    if (!g.is_connected())
        throw PreconditionError(
            "equality_characterization: the equality statement assumes G connected");
    require_non_isolated(g, v);
    if (is_complete(g)) return true;
    return is_star(g) && g.degree(v) == 1;
}

double equality_structure_check(const Graph& g, VertexId v, const Tolerances& tol) {
    if (g.degree(v) != 1)
        throw PreconditionError("equality_structure_check: needs d(v) = 1");
    DeletionReport rep = deletion_report(g, v, tol);
    if (!rep.equality)
        throw PreconditionError(
            "equality_structure_check: the bound is strict for this pair");

    const Graph h = g.delete_vertex(v);
    const VertexId u_orig = g.neighborhood(v).front();
    const VertexId u = u_orig < v ? u_orig : u_orig - 1;
    const SymMatrix b_adj = h.adjacency();

    std::vector<double> e_u(h.n(), 0.0);
    e_u[u] = 1.0;
    auto b2 = b_adj.multiply(b_adj.multiply(e_u));

    const double mu2 = rep.mu * rep.mu;
    double residual = 0.0;
    for (int w = 0; w < h.n(); ++w)
        residual = std::max(residual, std::abs(b2[w] - mu2 * e_u[w]));

    // Combinatorial reading: (B^2 e_u)_w counts the common neighbors of w and u.
    for (int w = 0; w < h.n(); ++w) {
        int common = 0;
        for (int z = 0; z < h.n(); ++z)
            if (h.has_edge(w, z) && h.has_edge(u, z)) ++common;
        if (std::abs(b2[w] - common) > 1e-9)
            throw Error("equality_structure_check: (B^2 e_u)_" + std::to_string(w) +
                        " = " + std::to_string(b2[w]) + " is not the common-neighbor count " +
                        std::to_string(common));
    }
    return residual;
}

HongResult hong_bound(const Graph& g, double tol) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("hong_bound: requires delta(G) >= 1, vertex " +
                                    std::to_string(v) + " is isolated");
    HongResult r;
    r.lambda = spectral_radius(g.adjacency());
    r.bound = std::sqrt(2.0 * g.edge_count() - g.n() + 1.0);
    r.holds = r.lambda <= r.bound + tol;
    return r;
}

NikiforovResult nikiforov_bound(const Graph& g, double tol) {
    if (!g.is_connected())
        throw PreconditionError("nikiforov_bound: requires G connected");

    Spectrum s = jacobi_eigen(g.adjacency());
    std::vector<double> perron = s.vectors.front();
    double sum = 0.0;
    for (double c : perron) sum += c;
    if (sum < 0.0)
        for (double& c : perron) c = -c;

    NikiforovResult r;
    // Lowest index among the (numerically) tied minimum components.
    double raw_min = perron[0];
    for (int i = 1; i < g.n(); ++i) raw_min = std::min(raw_min, perron[i]);
    r.vertex = 0;
    while (perron[r.vertex] > raw_min + 1e-12) ++r.vertex;
    r.x_min = perron[r.vertex];
    const double x2 = r.x_min * r.x_min;
    if (x2 >= 0.5 - 1e-12)
        throw InapplicableBoundError(
            "nikiforov_bound: smallest Perron component has x^2 >= 1/2");

    r.lambda = spectral_radius(g.adjacency());
    r.mu = g.n() >= 2 ? spectral_radius(g.delete_vertex(r.vertex).adjacency()) : 0.0;
    r.bound = r.mu * (1.0 - x2) / (1.0 - 2.0 * x2);
    r.holds = r.lambda <= r.bound + tol;
    return r;
}

CorollaryResult min_degree_corollary(const Graph& g, double tol) {
    if (g.n() < 2)
        throw PreconditionError("min_degree_corollary: need n >= 2");
    CorollaryResult r;
    r.vertex = g.min_degree_vertex();
    r.lambda = spectral_radius(g.adjacency());
    r.mu = spectral_radius(g.delete_vertex(r.vertex).adjacency());
    r.avg_degree = 2.0 * g.edge_count() / g.n();
    r.premise_holds = g.degree(r.vertex) <= r.avg_degree + 1e-12 &&
                      r.avg_degree <= r.lambda + tol;
    r.holds = r.lambda <= r.mu + 1.0 + tol;
    return r;
}

}  // namespace sdl
