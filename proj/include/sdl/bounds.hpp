#pragma once

#include <optional>

#include "sdl/graph.hpp"

namespace sdl {

/// Numerical knobs shared across the bound and certificate operations.
struct Tolerances {
    double eigen_tol = 1e-12;  // Jacobi off-diagonal convergence
    double num_tol = 1e-8;     // slack for inequality checks
    double eq_tol = 1e-7;      // |bound - lambda| below this counts as equality
    double psd_tol = 1e-8;     // PSD verdict slack
    double degeneracy = 1e-6;  // lambda - mu at or below this skips matrix certificates
};

/// Vertex-deletion bound lambda(G) <= sqrt(mu^2 + 2 d(v) - 1) evaluated for
/// one (G, v) pair.
struct DeletionReport {
    double lambda;       // lambda(G)
    double mu;           // lambda(G - v)
    int degree;          // d(v)
    double bound;        // sqrt(mu^2 + 2 d(v) - 1)
    double gap;          // bound - lambda, >= 0 up to num_tol
    double squared_gap;  // 2 d(v) - 1 - (lambda^2 - mu^2), >= 0 up to num_tol
    bool equality;       // |gap| < eq_tol
};

DeletionReport deletion_report(const Graph& g, VertexId v,
                               const Tolerances& tol = {});

/// Numerical residuals for every step of the deletion-bound proof. The
/// matrix-based fields need (lambda I - B) to be safely invertible; they are
/// skipped (left empty) when lambda - mu <= degeneracy, flagged `degenerate`.
struct Certificate {
    double lambda;
    double mu;
    int degree;

    bool degenerate;
    std::optional<double> schur_residual;  // |lambda - b^T (lambda I - B)^-1 b|
    std::optional<double> m_min_eig;       // smallest eigenvalue of M
    std::optional<double> btMb;            // b^T M b
    std::optional<double> identity_lhs;    // (lambda d + b^T B b)/(lambda^2-mu^2) - lambda,
                                           // equals btMb up to rounding

    long nbhd_edge_sum;                    // b^T B b = 2 e(G[N(v)]), always even
    double avg_deg_F;                      // (2 d + b^T B b) / (d + 1)
    std::optional<double> avg_deg_margin;  // avg_deg_F - b^T B b/(d-1), d >= 2 only
    bool m_leq_lambda_dm1;                 // b^T B b <= lambda (d - 1) + num_tol
};

Certificate proof_certificate(const Graph& g, VertexId v,
                              const Tolerances& tol = {});

/// Structural equality predicate of the deletion bound: true iff G is a star
/// with v a leaf, or G is complete. Requires G connected and v non-isolated.
bool equality_characterization(const Graph& g, VertexId v);

/// For an equality pair with d(v) = 1: returns |B^2 e_u - mu^2 e_u|_inf where
/// u is v's unique neighbor in G - v. Also cross-checks the combinatorial
/// reading (B^2 e_u)_w = |N_H(w) /\ N_H(u)| against direct common-neighbor
/// counts.
double equality_structure_check(const Graph& g, VertexId v,
                                const Tolerances& tol = {});

struct HongResult {
    double lambda;
    double bound;  // sqrt(2m - n + 1)
    bool holds;    // lambda <= bound + tol
};

/// lambda(G) <= sqrt(2m - n + 1), valid when delta(G) >= 1.
HongResult hong_bound(const Graph& g, double tol = 1e-8);

struct NikiforovResult {
    VertexId vertex;  // argmin of the Perron vector, ties -> lowest index
    double x_min;     // smallest Perron component
    double lambda;
    double mu;        // lambda(G - vertex)
    double bound;     // mu (1 - x^2) / (1 - 2 x^2)
    bool holds;
};

/// Nikiforov's deletion bound at the smallest Perron component. Requires G
/// connected; throws InapplicableBoundError when x_min^2 >= 1/2 (e.g. K_2).
NikiforovResult nikiforov_bound(const Graph& g, double tol = 1e-8);

struct CorollaryResult {
    VertexId vertex;  // minimum degree vertex
    double lambda;
    double mu;
    double avg_degree;   // 2m / n
    bool premise_holds;  // d(v) <= 2m/n <= lambda
    bool holds;          // lambda <= mu + 1 + tol
};

/// Corollary at a minimum-degree vertex: lambda(G) <= lambda(G - v) + 1,
/// with the premise chain d(v) <= 2m/n <= lambda(G) verified numerically.
CorollaryResult min_degree_corollary(const Graph& g, double tol = 1e-8);

}  // namespace sdl
