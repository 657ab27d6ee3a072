#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdl/bounds.hpp"
#include "sdl/graph.hpp"

namespace sdl {

struct ScanConfig {
    enum class Source { Enumerate, Random, File };

    Source source = Source::Enumerate;

    // Enumerate: all connected isomorphism classes on n_min..n_max vertices.
    int n_min = 2;
    int n_max = 7;

    // Random: `trials` draws of G(rand_n, rand_p); trial t is seeded seed + t.
    int rand_n = 0;
    double rand_p = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;

    // File: graph6 lines.
    std::string path;

    Tolerances tol;

    struct Checks {
        bool bound = true;
        bool certificates = true;
        bool hong = true;
        bool nikiforov = true;
        bool corollary = true;
        bool equality = true;
    } checks;

    int jobs = 1;  // 1 = serial reference path; 0 = all hardware threads
};

/// One (graph, vertex) record.
struct ScanRow {
    std::string graph6;
    int n;
    int vertex;
    int degree;
    double lambda;
    double mu;
    double bound;
    double gap;
    double squared_gap;
    bool equality_observed;
    bool equality_predicted;  // false for disconnected graphs
    std::optional<double> schur_residual;
    std::optional<double> m_min_eig;
    bool degenerate;
    bool connected;  // not exported; gates the equality-mismatch check
};

struct ScanReport {
    std::vector<ScanRow> rows;
    long violation_count = 0;
    long equality_mismatch_count = 0;
    double min_gap = 0.0;  // min over rows of (bound - lambda)
    std::map<int, long> gap_histogram;  // floor(squared_gap / 0.1) -> count
    std::vector<std::string> violations;  // one message per failed check
    int graphs_scanned = 0;
};

/// Serial reference implementation.
ScanReport run_scan_serial(const ScanConfig& config);

/// Same results as run_scan_serial; fans (graph, vertex) work out to OpenMP
/// workers when config.jobs != 1. Output is identical for any worker count.
ScanReport run_scan(const ScanConfig& config);

/// Exact column set, in order:
/// graph6,n,vertex,degree,lambda,mu,bound,gap,squared_gap,
/// equality_observed,equality_predicted,schur_residual,m_min_eig,degenerate
/// Floats carry 12 significant digits, booleans are true/false, absent
/// certificate fields are empty cells.
void export_csv(const ScanReport& report, std::ostream& out);
void export_csv(const ScanReport& report, const std::string& path);

void export_json(const ScanReport& report, std::ostream& out);
void export_json(const ScanReport& report, const std::string& path);

struct GapSummary {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    long count = 0;
};

struct GapStatistics {
    GapSummary overall;
    std::map<int, GapSummary> by_n;
    std::map<int, GapSummary> by_degree;
};

/// min/median/max of squared_gap, grouped by n and by d(v).
GapStatistics gap_statistics(const ScanReport& report);

}  // namespace sdl
