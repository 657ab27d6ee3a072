#pragma once

#include <span>
#include <vector>

#include "sdl/errors.hpp"

namespace sdl {

/// Dense real symmetric matrix. One value is stored per unordered index
/// pair, so symmetry holds exactly by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    static SymMatrix identity(int n);

    int n() const { return n_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }

    void set(int i, int j, double value) { data_[index(i, j)] = value; }

    double frobenius_norm() const;
    double trace() const;
    /// Maximum absolute row sum (the induced infinity norm).
    double inf_norm() const;

    /// y = A x
    std::vector<double> multiply(std::span<const double> x) const;

private:
    std::size_t index(int i, int j) const;

    int n_;
    std::vector<double> data_;  // packed upper triangle, row-major
};

/// Full eigendecomposition of a symmetric matrix: A = U diag(values) U^T.
/// `values` is nonincreasing, `vectors[k]` is the unit eigenvector paired
/// with `values[k]`, and `tol_used` is the absolute residual scale the
/// decomposition is guaranteed to satisfy:
///   |A q_k - values[k] q_k|_inf <= tol_used * max(1, |values[k]|)
///   |q_i . q_j - delta_ij|      <= tol_used
struct Spectrum {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    double tol_used = 0.0;
};

struct JacobiOptions {
    double tol = 1e-12;  // stop once off(A)_F <= tol * |A|_F
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver. Sweeps rotations over all index pairs until
/// the off-diagonal Frobenius norm drops below tol * |A|_F, then sorts the
/// eigenpairs by descending eigenvalue.
Spectrum jacobi_eigen(const SymMatrix& a, const JacobiOptions& opt = {});
Spectrum jacobi_eigen(const SymMatrix& a, double tol);

/// Largest eigenvalue magnitude, computed from the full Jacobi spectrum and
/// polished with one Rayleigh quotient against the exact matrix. For
/// adjacency matrices this equals the Perron root.
double spectral_radius(const SymMatrix& a, double tol = 1e-12);

/// Power-iteration route for adjacency matrices: iterates on A + cI with
/// shift c = max absolute row sum so that bipartite +-lambda pairs do not
/// stall the iteration. Cross-check path; must agree with spectral_radius.
double power_spectral_radius(const SymMatrix& a, double tol = 1e-10,
                             int max_iters = 500000);

/// Solve A x = rhs for symmetric positive definite A. Cholesky plus
/// iterative refinement, falling over to Gaussian elimination with partial
/// pivoting if the refinement stalls. Guarantees
/// |A x - rhs|_inf <= 1e-10 * max(1, |rhs|_inf).
std::vector<double> solve_spd(const SymMatrix& a, std::span<const double> rhs);

/// x^T A x
double quadratic_form(const SymMatrix& a, std::span<const double> x);

/// Smallest eigenvalue, Rayleigh-polished. The PSD verdict for a matrix M
/// is min_eigenvalue(M) >= -psd_tol.
double min_eigenvalue(const SymMatrix& a, double tol = 1e-12);

}  // namespace sdl
