// Serial-vs-OpenMP comparison for the sweep kernel: enumerates the connected
// graphs on 7 vertices once, then times the full per-(graph, vertex) check
// battery through the serial reference path and the parallel path.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sdl/bounds.hpp"
#include "sdl/linalg.hpp"
#include "sdl/scan.hpp"

namespace {

template <typename F>
double time_run(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
    sdl::ScanConfig cfg;
    cfg.source = sdl::ScanConfig::Source::Enumerate;
    cfg.n_min = 2;
    cfg.n_max = 7;

    // Warm-up also validates both paths agree before timing anything.
    sdl::ScanReport serial_report;
    double t_serial = time_run([&] { serial_report = sdl::run_scan_serial(cfg); });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    cfg.jobs = threads;
    sdl::ScanReport parallel_report;
    double t_parallel = time_run([&] { parallel_report = sdl::run_scan(cfg); });

    std::printf("sweep n=2..7: %zu rows over %d graphs\n", serial_report.rows.size(),
                serial_report.graphs_scanned);
    std::printf("serial    : %8.3f s\n", t_serial);
    std::printf("openmp x%d : %8.3f s  (speedup %.2fx)\n", threads, t_parallel,
                t_serial / t_parallel);

    bool same = serial_report.rows.size() == parallel_report.rows.size() &&
                serial_report.violation_count == parallel_report.violation_count;
    for (std::size_t i = 0; same && i < serial_report.rows.size(); ++i) {
        const auto& a = serial_report.rows[i];
        const auto& b = parallel_report.rows[i];
        same = a.graph6 == b.graph6 && a.vertex == b.vertex && a.lambda == b.lambda &&
               a.gap == b.gap;
    }
    std::printf("paths agree: %s\n", same ? "yes" : "NO");

    // Dense eigensolver scaling point used by the large-instance smoke check.
    sdl::SymMatrix k50 = sdl::complete(50).adjacency();
    double t_eig = time_run([&] { (void)sdl::spectral_radius(k50); });
    std::printf("jacobi K_50: %8.3f s\n", t_eig);
    return same ? 0 : 1;
}
