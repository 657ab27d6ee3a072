#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sdl/enumerate.hpp"
#include "sdl/graph.hpp"
#include "sdl/linalg.hpp"

using namespace sdl;

namespace {

// Test-only determinant via Gaussian elimination; used to cross-check
// computed eigenvalues against the characteristic polynomial.
double determinant(const SymMatrix& a, double shift) {
    const int n = a.n();
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i) * n + j] = a(i, j) - (i == j ? shift : 0.0);
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
        if (m[piv * n + k] == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
            det = -det;
        }
        det *= m[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            double f = m[i * n + k] / m[k * n + k];
            for (int j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
        }
    }
    return det;
}

std::vector<double> cycle_eigenvalues(int n) {
    std::vector<double> ev(n);
    for (int k = 0; k < n; ++k) ev[k] = 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

std::vector<double> path_eigenvalues(int n) {
    std::vector<double> ev(n);
    for (int k = 1; k <= n; ++k)
        ev[k - 1] = 2.0 * std::cos(std::numbers::pi * k / (n + 1));
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

SymMatrix random_symmetric(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, unit(rng));
    return a;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("jacobi: identity eigenvalues are all one") {
    auto s = jacobi_eigen(SymMatrix::identity(5), 1e-12);
    for (double t : s.values) CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("jacobi: C_6 spectrum matches the closed form and the char poly") {
    auto a = cycle(6).adjacency();
    auto s = jacobi_eigen(a, 1e-12);
    auto expected = cycle_eigenvalues(6);  // {2, 1, 1, -1, -1, -2}
    REQUIRE(s.values.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(std::abs(s.values[k] - expected[k]) < 1e-10);
    // Independent route: each eigenvalue is a root of det(A - t I).
    for (double t : s.values) CHECK(std::abs(determinant(a, t)) < 1e-6);
}

TEST_CASE("jacobi: P_4 largest eigenvalue is the golden ratio") {
    auto s = jacobi_eigen(path(4).adjacency(), 1e-12);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(s.values.front() - golden) < 1e-10);
    CHECK(std::abs(golden - 2.0 * std::cos(std::numbers::pi / 5.0)) < 1e-15);
}

TEST_CASE("jacobi: rejects nonpositive tolerance, reports nonconvergence") {
    CHECK_THROWS_AS(jacobi_eigen(SymMatrix::identity(2), 0.0), PreconditionError);
    JacobiOptions opt;
    opt.tol = 1e-14;
    opt.max_sweeps = 0;
    CHECK_THROWS_AS(jacobi_eigen(cycle(5).adjacency(), opt), ConvergenceError);
}

TEST_CASE("jacobi: spectrum invariants on random matrices") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 29);  // n <= 30
        SymMatrix a = random_symmetric(n, rng);
        auto s = jacobi_eigen(a, 1e-12);

        CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));

        // Residual per eigenpair.
        for (int k = 0; k < n; ++k) {
            auto aq = a.multiply(s.vectors[k]);
            double worst = 0.0;
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(aq[i] - s.values[k] * s.vectors[k][i]));
            CHECK(worst <= s.tol_used * std::max(1.0, std::abs(s.values[k])));
        }

        // Orthonormality.
        double ortho = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double dot = 0.0;
                for (int k = 0; k < n; ++k) dot += s.vectors[i][k] * s.vectors[j][k];
                ortho = std::max(ortho, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        CHECK(ortho <= 1e-10);
        CHECK(ortho <= s.tol_used);

        // Reconstruction |U diag(t) U^T - A|_inf.
        double recon = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double sum = 0.0;
                for (int k = 0; k < n; ++k)
                    sum += s.vectors[k][i] * s.values[k] * s.vectors[k][j];
                recon = std::max(recon, std::abs(sum - a(i, j)));
            }
        CHECK(recon <= 1e-9);

        // Trace preservation.
        double tsum = 0.0;
        for (double t : s.values) tsum += t;
        CHECK(std::abs(tsum - a.trace()) <= 1e-9);
    }
}

TEST_CASE("spectral_radius: named graphs") {
    CHECK(spectral_radius(complete(4).adjacency()) == doctest::Approx(3.0).epsilon(1e-12));
    // Star: lambda^2 = n - 1 from the characteristic polynomial.
    CHECK(std::abs(spectral_radius(star(4).adjacency()) - std::sqrt(3.0)) < 1e-10);
    // Disconnected: max over components.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);  // K_3
    g.add_edge(3, 4);  // K_2
    CHECK(std::abs(spectral_radius(g.adjacency()) - 2.0) < 1e-10);
}

TEST_CASE("power route agrees with the Jacobi route on every small graph") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            auto a = g.adjacency();
            CHECK(std::abs(power_spectral_radius(a) - spectral_radius(a)) < 1e-8);
        }
    }
}

TEST_CASE("power route handles bipartite +-lambda pairs and the zero matrix") {
    CHECK(std::abs(power_spectral_radius(cycle(6).adjacency()) - 2.0) < 1e-8);
    CHECK(std::abs(power_spectral_radius(path(2).adjacency()) - 1.0) < 1e-8);
    CHECK(power_spectral_radius(Graph(3).adjacency()) == 0.0);
}

TEST_CASE("solve_spd: fixed systems") {
    SymMatrix a(2);  // 2I - A(K_2)
    a.set(0, 0, 2.0);
    a.set(1, 1, 2.0);
    a.set(0, 1, -1.0);
    std::vector<double> rhs{1.0, 1.0};
    auto x = solve_spd(a, rhs);
    CHECK(std::abs(x[0] - 1.0) < 1e-10);  // direct inverse (1/3)[[2,1],[1,2]]
    CHECK(std::abs(x[1] - 1.0) < 1e-10);

    std::vector<double> r3{4.0, 5.0, 6.0};
    auto y = solve_spd(SymMatrix::identity(3), r3);
    for (int i = 0; i < 3; ++i) CHECK(y[i] == doctest::Approx(r3[i]));

    SymMatrix d(2);
    d.set(0, 0, 2.0);
    d.set(1, 1, 4.0);
    std::vector<double> r2{2.0, 2.0};
    auto z = solve_spd(d, r2);
    CHECK(z[0] == doctest::Approx(1.0));
    CHECK(z[1] == doctest::Approx(0.5));
}

TEST_CASE("solve_spd: random SPD systems meet the residual contract") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 29);
        // R R^T + I is safely positive definite.
        std::vector<double> r(static_cast<std::size_t>(n) * n);
        for (double& v : r) v = unit(rng);
        SymMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = i == j ? 1.0 : 0.0;
                for (int k = 0; k < n; ++k) s += r[i * n + k] * r[j * n + k];
                a.set(i, j, s);
            }
        std::vector<double> rhs(n);
        for (double& v : rhs) v = unit(rng);

        auto x = solve_spd(a, rhs);
        auto ax = a.multiply(x);
        double resid = 0.0, rhs_inf = 0.0;
        for (int i = 0; i < n; ++i) {
            resid = std::max(resid, std::abs(ax[i] - rhs[i]));
            rhs_inf = std::max(rhs_inf, std::abs(rhs[i]));
        }
        CHECK(resid <= 1e-9);
        CHECK(resid <= 1e-10 * std::max(1.0, rhs_inf));
    }
}

TEST_CASE("solve_spd: rejects indefinite matrices and size mismatches") {
    SymMatrix a(2);  // A(K_2), eigenvalues +-1
    a.set(0, 1, 1.0);
    std::vector<double> rhs{1.0, 0.0};
    CHECK_THROWS_AS(solve_spd(a, rhs), NotPositiveDefiniteError);
    std::vector<double> wrong{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(solve_spd(SymMatrix::identity(2), wrong), DimensionError);
}

TEST_CASE("quadratic_form") {
    SymMatrix k2 = path(2).adjacency();
    std::vector<double> ones2{1.0, 1.0};
    CHECK(quadratic_form(k2, ones2) == doctest::Approx(2.0));

    std::vector<double> any{0.3, -0.7};
    CHECK(quadratic_form(SymMatrix(2), any) == 0.0);

    SymMatrix p3 = path(3).adjacency();
    std::vector<double> ones3{1.0, 1.0, 1.0};
    CHECK(quadratic_form(p3, ones3) == doctest::Approx(4.0));  // 2 * e(P_3)

    CHECK_THROWS_AS(quadratic_form(p3, ones2), DimensionError);
}

TEST_CASE("min_eigenvalue") {
    CHECK(min_eigenvalue(SymMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(std::abs(min_eigenvalue(path(2).adjacency()) - (-1.0)) < 1e-10);
    CHECK(min_eigenvalue(SymMatrix(3)) == doctest::Approx(0.0));
}

TEST_CASE("eigensolver closed forms: cycles, paths, stars up to n = 12") {
    for (int n = 3; n <= 12; ++n) {
        auto s = jacobi_eigen(cycle(n).adjacency(), 1e-12);
        auto expected = cycle_eigenvalues(n);
        for (int k = 0; k < n; ++k) CHECK(std::abs(s.values[k] - expected[k]) < 1e-10);
    }
    for (int n = 2; n <= 12; ++n) {
        auto s = jacobi_eigen(path(n).adjacency(), 1e-12);
        auto expected = path_eigenvalues(n);
        for (int k = 0; k < n; ++k) CHECK(std::abs(s.values[k] - expected[k]) < 1e-10);
    }
    for (int n = 3; n <= 12; ++n) {  // star spectrum {sqrt(n-1), 0, ..., -sqrt(n-1)}
        auto s = jacobi_eigen(star(n).adjacency(), 1e-12);
        double root = std::sqrt(n - 1.0);
        CHECK(std::abs(s.values.front() - root) < 1e-10);
        CHECK(std::abs(s.values.back() + root) < 1e-10);
        for (int k = 1; k < n - 1; ++k) CHECK(std::abs(s.values[k]) < 1e-10);
    }
}

}  // TEST_SUITE
