#include "sdl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace sdl {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw PreconditionError("SymMatrix: n must be >= 1");
    data_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix a(n);
    for (int i = 0; i < n; ++i) a.set(i, i, 1.0);
    return a;
}

std::size_t SymMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DimensionError("SymMatrix: index (" + std::to_string(i) + "," +
                             std::to_string(j) + ") out of range for n=" +
                             std::to_string(n_));
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
           (j - i);
}

double SymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            double v = (*this)(i, j);
            sum += v * v;
        }
    }
    return std::sqrt(sum);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
        throw DimensionError("SymMatrix::multiply: vector size " +
                             std::to_string(x.size()) + " != n=" + std::to_string(n_));
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Spectrum jacobi_eigen(const SymMatrix& a, double tol) {
    JacobiOptions opt;
    opt.tol = tol;
    return jacobi_eigen(a, opt);
}

Spectrum jacobi_eigen(const SymMatrix& a, const JacobiOptions& opt) {
    if (opt.tol <= 0.0) throw PreconditionError("jacobi_eigen: tol must be > 0");
    const int n = a.n();

    // Dense working copy and accumulated rotations, A = V * W * V^T throughout.
    std::vector<double> w(static_cast<std::size_t>(n) * n);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i) * n + j] = a(i, j);
    }

    const double norm_a = a.frobenius_norm();
    const double target = opt.tol * norm_a;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double e = w[static_cast<std::size_t>(i) * n + j];
                s += 2.0 * e * e;
            }
        return std::sqrt(s);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > target) {
        if (sweep++ >= opt.max_sweeps)
            throw ConvergenceError(
                "jacobi_eigen: no convergence after " + std::to_string(opt.max_sweeps) +
                    " sweeps, off-diagonal residual " + fmt(off / std::max(norm_a, 1e-300)),
                off / std::max(norm_a, 1e-300));
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = w[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                double theta = (w[static_cast<std::size_t>(q) * n + q] -
                                w[static_cast<std::size_t>(p) * n + p]) /
                               (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = w[static_cast<std::size_t>(k) * n + p];
                    double akq = w[static_cast<std::size_t>(k) * n + q];
                    w[static_cast<std::size_t>(k) * n + p] =
                        w[static_cast<std::size_t>(p) * n + k] = c * akp - s * akq;
                    w[static_cast<std::size_t>(k) * n + q] =
                        w[static_cast<std::size_t>(q) * n + k] = s * akp + c * akq;
                }
                w[static_cast<std::size_t>(p) * n + p] -= t * apq;
                w[static_cast<std::size_t>(q) * n + q] += t * apq;
                w[static_cast<std::size_t>(p) * n + q] =
                    w[static_cast<std::size_t>(q) * n + p] = 0.0;

                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<std::size_t>(k) * n + p];
                    double vkq = v[static_cast<std::size_t>(k) * n + q];
                    v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                    v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
        }
        off = off_norm();
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return w[static_cast<std::size_t>(i) * n + i] > w[static_cast<std::size_t>(j) * n + j];
    });

    Spectrum out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        int col = order[k];
        out.values[k] = w[static_cast<std::size_t>(col) * n + col];
        auto& q = out.vectors[k];
        for (int i = 0; i < n; ++i) q[i] = v[static_cast<std::size_t>(i) * n + col];
        // Deterministic sign: largest-magnitude component positive.
        int big = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(q[i]) > std::abs(q[big])) big = i;
        if (q[big] < 0.0)
            for (double& x : q) x = -x;
    }
    out.tol_used = opt.tol * std::max(1.0, norm_a);
    return out;
}

namespace {

double rayleigh(const SymMatrix& a, std::span<const double> q) {
    auto aq = a.multiply(q);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        num += q[i] * aq[i];
        den += q[i] * q[i];
    }
    return num / den;
}

}  // namespace

double spectral_radius(const SymMatrix& a, double tol) {
    Spectrum s = jacobi_eigen(a, tol);
    // Candidates for max magnitude sit at the ends of the sorted list; prefer
    // the positive end on ties (the Perron value for adjacency matrices).
    std::size_t k = std::abs(s.values.front()) >= std::abs(s.values.back())
                        ? 0
                        : s.values.size() - 1;
    return std::abs(rayleigh(a, s.vectors[k]));
}

double power_spectral_radius(const SymMatrix& a, double tol, int max_iters) {
    if (tol <= 0.0) throw PreconditionError("power_spectral_radius: tol must be > 0");
    const int n = a.n();
    const double c = a.inf_norm();
    if (c == 0.0) return 0.0;  // zero matrix

    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * i;  // deterministic start
    double nx = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (double& e : x) e /= nx;

    for (int it = 0; it < max_iters; ++it) {
        y = a.multiply(x);
        for (int i = 0; i < n; ++i) y[i] += c * x[i];  // (A + cI) x

        double theta = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double res2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] - theta * x[i];
            res2 += r * r;
        }
        if (std::sqrt(res2) <= tol * std::max(1.0, std::abs(theta)))
            return std::abs(theta - c);

        double ny = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
    }
    throw ConvergenceError("power_spectral_radius: no convergence after " +
                               std::to_string(max_iters) + " iterations",
                           tol);
}

namespace {

constexpr double kSolveTol = 1e-10;

// Lower-triangular Cholesky factor, or throws NotPositiveDefiniteError.
std::vector<double> cholesky(const SymMatrix& a) {
    const int n = a.n();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) {
            double ljk = l[static_cast<std::size_t>(j) * n + k];
            d -= ljk * ljk;
        }
        if (d <= 0.0)
            throw NotPositiveDefiniteError(
                "solve_spd: nonpositive pivot " + fmt(d) + " at column " +
                std::to_string(j) + "; matrix is not positive definite");
        double ljj = std::sqrt(d);
        l[static_cast<std::size_t>(j) * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<std::size_t>(i) * n + k] *
                     l[static_cast<std::size_t>(j) * n + k];
            l[static_cast<std::size_t>(i) * n + j] = s / ljj;
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const std::vector<double>& l, int n,
                                   std::span<const double> rhs) {
    std::vector<double> x(rhs.begin(), rhs.end());
    for (int i = 0; i < n; ++i) {
        double s = x[i];
        for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * n + k] * x[k];
        x[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int k = i + 1; k < n; ++k) s -= l[static_cast<std::size_t>(k) * n + i] * x[k];
        x[i] = s / l[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

// LU with partial pivoting; returns false on a (numerically) singular pivot.
struct Lu {
    std::vector<double> lu;
    std::vector<int> perm;
    int n = 0;
};

bool lu_factor(const SymMatrix& a, Lu& out) {
    const int n = a.n();
    out.n = n;
    out.lu.assign(static_cast<std::size_t>(n) * n, 0.0);
    out.perm.resize(n);
    auto& m = out.lu;
    for (int i = 0; i < n; ++i) {
        out.perm[i] = i;
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = a(i, j);
    }
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[static_cast<std::size_t>(i) * n + k]) >
                std::abs(m[static_cast<std::size_t>(piv) * n + k]))
                piv = i;
        if (m[static_cast<std::size_t>(piv) * n + k] == 0.0) return false;
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(piv) * n + j],
                          m[static_cast<std::size_t>(k) * n + j]);
            std::swap(out.perm[piv], out.perm[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = m[static_cast<std::size_t>(i) * n + k] /
                       m[static_cast<std::size_t>(k) * n + k];
            m[static_cast<std::size_t>(i) * n + k] = f;
            for (int j = k + 1; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] -=
                    f * m[static_cast<std::size_t>(k) * n + j];
        }
    }
    return true;
}

std::vector<double> lu_solve(const Lu& f, std::span<const double> rhs) {
    const int n = f.n;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < i; ++k) x[i] -= f.lu[static_cast<std::size_t>(i) * n + k] * x[k];
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x[i] -= f.lu[static_cast<std::size_t>(i) * n + k] * x[k];
        x[i] /= f.lu[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

// |rhs - A x|_inf with long double accumulation; also writes the residual
// vector for refinement.
double residual_inf(const SymMatrix& a, std::span<const double> x,
                    std::span<const double> rhs, std::vector<double>& r) {
    const int n = a.n();
    r.resize(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        long double s = rhs[i];
        for (int j = 0; j < n; ++j) s -= static_cast<long double>(a(i, j)) * x[j];
        r[i] = static_cast<double>(s);
        worst = std::max(worst, std::abs(r[i]));
    }
    return worst;
}

}  // namespace

std::vector<double> solve_spd(const SymMatrix& a, std::span<const double> rhs) {
    const int n = a.n();
    if (static_cast<int>(rhs.size()) != n)
        throw DimensionError("solve_spd: rhs size " + std::to_string(rhs.size()) +
                             " != n=" + std::to_string(n));
    double rhs_inf = 0.0;
    for (double v : rhs) rhs_inf = std::max(rhs_inf, std::abs(v));
    const double target = kSolveTol * std::max(1.0, rhs_inf);

    auto l = cholesky(a);
    auto x = cholesky_solve(l, n, rhs);

    std::vector<double> r;
    double res = residual_inf(a, x, rhs, r);
    for (int round = 0; round < 8 && res > target; ++round) {
        auto d = cholesky_solve(l, n, r);
        for (int i = 0; i < n; ++i) x[i] += d[i];
        res = residual_inf(a, x, rhs, r);
    }
    if (res <= target) return x;

    // Refinement stalled; switch to Gaussian elimination with partial pivoting.
    Lu f;
    if (!lu_factor(a, f))
        throw NotPositiveDefiniteError("solve_spd: singular pivot in elimination fallback");
    x = lu_solve(f, rhs);
    res = residual_inf(a, x, rhs, r);
    for (int round = 0; round < 8 && res > target; ++round) {
        auto d = lu_solve(f, r);
        for (int i = 0; i < n; ++i) x[i] += d[i];
        res = residual_inf(a, x, rhs, r);
    }
    if (res > target)
        throw ConvergenceError("solve_spd: residual " + fmt(res) +
                                   " above target " + fmt(target),
                               res);
    return x;
}

double quadratic_form(const SymMatrix& a, std::span<const double> x) {
    if (static_cast<int>(x.size()) != a.n())
        throw DimensionError("quadratic_form: vector size " + std::to_string(x.size()) +
                             " != n=" + std::to_string(a.n()));
    auto ax = a.multiply(x);
    return std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
}

double min_eigenvalue(const SymMatrix& a, double tol) {
    Spectrum s = jacobi_eigen(a, tol);
    return rayleigh(a, s.vectors.back());
}

}  // namespace sdl
