#include "sdl/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "sdl/enumerate.hpp"
#include "sdl/graph6.hpp"

namespace sdl {

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct CorpusEntry {
    Graph g;
    std::string key;  // graph6 line; the canonical key for enumerated corpora
};

std::vector<CorpusEntry> build_corpus(const ScanConfig& cfg) {
    std::vector<CorpusEntry> corpus;
    switch (cfg.source) {
        case ScanConfig::Source::Enumerate: {
            if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
                throw PreconditionError("scan: need 1 <= n_min <= n_max");
            if (cfg.n_max > 7)
                throw LimitError("scan: enumeration capped at n <= 7; use a graph6 file");
            for (int n = cfg.n_min; n <= cfg.n_max; ++n)
                for (Graph& g : enumerate_connected(n)) {
                    std::string key = graph6_write(g);
                    corpus.push_back({std::move(g), std::move(key)});
                }
            break;
        }
        case ScanConfig::Source::Random: {
            if (cfg.rand_n < 1 || cfg.rand_n > 62)
                throw PreconditionError("scan: random source needs 1 <= n <= 62");
            if (cfg.rand_p < 0.0 || cfg.rand_p > 1.0)
                throw PreconditionError("scan: p must be in [0, 1]");
            if (cfg.trials < 0) throw PreconditionError("scan: trials must be >= 0");
            for (int t = 0; t < cfg.trials; ++t) {
                Graph g = erdos_renyi(cfg.rand_n, cfg.rand_p, cfg.seed + t);
                std::string key = graph6_write(g);
                corpus.push_back({std::move(g), std::move(key)});
            }
            break;
        }
        case ScanConfig::Source::File: {
            for (Graph& g : graph6_read_file(cfg.path)) {
                std::string key = graph6_write(g);
                corpus.push_back({std::move(g), std::move(key)});
            }
            break;
        }
    }
    return corpus;
}

struct GraphResult {
    std::vector<ScanRow> rows;
    std::vector<std::string> problems;
    long mismatches = 0;
};

void check(bool ok, GraphResult& res, const std::string& where, const std::string& what) {
    if (!ok) res.problems.push_back(where + ": " + what);
}

GraphResult evaluate_graph(const CorpusEntry& entry, const ScanConfig& cfg) {
    GraphResult res;
    const Graph& g = entry.g;
    const Tolerances& tol = cfg.tol;
    const bool connected = g.is_connected();
    const auto& checks = cfg.checks;

    bool has_isolated = false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) has_isolated = true;

    if (checks.hong && !has_isolated) {
        HongResult hong = hong_bound(g, tol.num_tol);
        check(hong.holds, res, entry.key,
              "Hong bound violated: lambda=" + fmt12(hong.lambda) +
                  " > bound=" + fmt12(hong.bound));
    }
    if (checks.nikiforov && connected && g.n() >= 2) {
        try {
            NikiforovResult nik = nikiforov_bound(g, tol.num_tol);
            check(nik.holds, res, entry.key,
                  "Nikiforov bound violated: lambda=" + fmt12(nik.lambda) +
                      " > bound=" + fmt12(nik.bound));
        } catch (const InapplicableBoundError&) {
            // x_k^2 >= 1/2 (K_2); nothing to check
        }
    }
    if (checks.corollary && g.n() >= 2) {
        CorollaryResult cor = min_degree_corollary(g, tol.num_tol);
        check(cor.holds, res, entry.key,
              "min-degree corollary violated: lambda=" + fmt12(cor.lambda) +
                  " > mu+1=" + fmt12(cor.mu + 1.0));
        check(cor.premise_holds, res, entry.key,
              "corollary premise d(v) <= 2m/n <= lambda violated");
    }

    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) continue;

        DeletionReport rep = deletion_report(g, v, tol);
        Certificate cert = proof_certificate(g, v, tol);
        const std::string where = entry.key + " v=" + std::to_string(v);

        ScanRow row;
        row.graph6 = entry.key;
        row.n = g.n();
        row.vertex = v;
        row.degree = rep.degree;
        row.lambda = rep.lambda;
        row.mu = rep.mu;
        row.bound = rep.bound;
        row.gap = rep.gap;
        row.squared_gap = rep.squared_gap;
        row.equality_observed = rep.equality;
        row.equality_predicted = connected ? equality_characterization(g, v) : false;
        row.schur_residual = cert.schur_residual;
        row.m_min_eig = cert.m_min_eig;
        row.degenerate = cert.degenerate;
        row.connected = connected;

        if (checks.bound) {
            check(row.squared_gap >= -tol.num_tol, res, where,
                  "deletion bound violated: squared_gap=" + fmt12(row.squared_gap));
            check(row.gap >= -tol.num_tol, res, where,
                  "deletion bound violated: gap=" + fmt12(row.gap));
            check(row.mu <= row.lambda + tol.num_tol, res, where,
                  "interlacing direction violated: mu > lambda");
            if (connected)
                check(row.mu < row.lambda, res, where,
                      "strict monotonicity violated: mu >= lambda on a connected graph");
        }

        if (checks.certificates) {
            check(cert.nbhd_edge_sum % 2 == 0, res, where, "b^T B b is odd");
            check(cert.nbhd_edge_sum <=
                      static_cast<long>(cert.degree) * (cert.degree - 1),
                  res, where, "b^T B b exceeds d(v)(d(v)-1)");
            check(cert.m_leq_lambda_dm1, res, where, "b^T B b > lambda (d(v)-1)");
            if (cert.degree >= 2) {
                check(cert.lambda + tol.num_tol >= cert.avg_deg_F, res, where,
                      "chain violated: avg_deg_F above lambda");
                check(cert.avg_deg_F >= cert.nbhd_edge_sum /
                                                static_cast<double>(cert.degree - 1) -
                                            tol.num_tol,
                      res, where, "chain violated: avg_deg_F below m/(d-1)");
                check(*cert.avg_deg_margin >= -1e-12, res, where, "avg-degree margin negative");
            }
            if (!cert.degenerate) {
                check(*cert.schur_residual < tol.num_tol, res, where,
                      "Schur residual " + fmt12(*cert.schur_residual));
                check(*cert.m_min_eig >= -tol.psd_tol, res, where,
                      "M not PSD: min eigenvalue " + fmt12(*cert.m_min_eig));
                check(std::abs(*cert.identity_lhs - *cert.btMb) < tol.eq_tol, res, where,
                      "certificate identity broken: lhs=" + fmt12(*cert.identity_lhs) +
                          " btMb=" + fmt12(*cert.btMb));
            }
        }

        if (checks.equality && connected) {
            if (row.equality_observed != row.equality_predicted) {
                ++res.mismatches;
                res.problems.push_back(where + ": equality mismatch, observed=" +
                                       (row.equality_observed ? "true" : "false") +
                                       " predicted=" +
                                       (row.equality_predicted ? "true" : "false"));
            }
            if (row.equality_observed && row.degree == 1) {
                double residual = equality_structure_check(g, v, tol);
                check(residual < tol.num_tol, res, where,
                      "B^2 e_u = mu^2 e_u residual " + fmt12(residual));
            }
        }

        res.rows.push_back(std::move(row));
    }
    return res;
}

ScanReport merge(std::vector<GraphResult>&& results) {
    ScanReport report;
    report.graphs_scanned = static_cast<int>(results.size());
    report.min_gap = std::numeric_limits<double>::infinity();
    for (auto& r : results) {
        report.equality_mismatch_count += r.mismatches;
        report.violation_count += static_cast<long>(r.problems.size());
        for (auto& p : r.problems) report.violations.push_back(std::move(p));
        for (auto& row : r.rows) {
            report.min_gap = std::min(report.min_gap, row.gap);
            int bucket = static_cast<int>(std::floor(row.squared_gap / 0.1 + 1e-12));
            ++report.gap_histogram[std::max(bucket, 0)];
            report.rows.push_back(std::move(row));
        }
    }
    if (report.rows.empty()) report.min_gap = 0.0;
    return report;
}

}  // namespace

ScanReport run_scan_serial(const ScanConfig& config) {
    auto corpus = build_corpus(config);
    std::vector<GraphResult> results(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        results[i] = evaluate_graph(corpus[i], config);
    return merge(std::move(results));
}

ScanReport run_scan(const ScanConfig& config) {
#ifdef _OPENMP
    if (config.jobs != 1) {
        auto corpus = build_corpus(config);
        std::vector<GraphResult> results(corpus.size());
        std::vector<std::string> failures(corpus.size());
        const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
        const auto count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                results[i] = evaluate_graph(corpus[i], config);
            } catch (const std::exception& e) {
                failures[i] = e.what();  // rethrown after the parallel region
            }
        }
        for (const auto& f : failures)
            if (!f.empty()) throw Error("scan worker failed: " + f);
        return merge(std::move(results));
    }
#endif
    return run_scan_serial(config);
}

void export_csv(const ScanReport& report, std::ostream& out) {
    out << "graph6,n,vertex,degree,lambda,mu,bound,gap,squared_gap,"
           "equality_observed,equality_predicted,schur_residual,m_min_eig,degenerate\n";
    for (const ScanRow& r : report.rows) {
        out << r.graph6 << ',' << r.n << ',' << r.vertex << ',' << r.degree << ','
            << fmt12(r.lambda) << ',' << fmt12(r.mu) << ',' << fmt12(r.bound) << ','
            << fmt12(r.gap) << ',' << fmt12(r.squared_gap) << ','
            << (r.equality_observed ? "true" : "false") << ','
            << (r.equality_predicted ? "true" : "false") << ','
            << (r.schur_residual ? fmt12(*r.schur_residual) : "") << ','
            << (r.m_min_eig ? fmt12(*r.m_min_eig) : "") << ','
            << (r.degenerate ? "true" : "false") << '\n';
    }
}

void export_csv(const ScanReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    export_csv(report, out);
    if (!out.good()) throw IoError("write failed for " + path);
}

void export_json(const ScanReport& report, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ScanRow& r : report.rows) {
        nlohmann::ordered_json row;
        row["graph6"] = r.graph6;
        row["n"] = r.n;
        row["vertex"] = r.vertex;
        row["degree"] = r.degree;
        row["lambda"] = r.lambda;
        row["mu"] = r.mu;
        row["bound"] = r.bound;
        row["gap"] = r.gap;
        row["squared_gap"] = r.squared_gap;
        row["equality_observed"] = r.equality_observed;
        row["equality_predicted"] = r.equality_predicted;
        if (r.schur_residual)
            row["schur_residual"] = *r.schur_residual;
        else
            row["schur_residual"] = nullptr;
        if (r.m_min_eig)
            row["m_min_eig"] = *r.m_min_eig;
        else
            row["m_min_eig"] = nullptr;
        row["degenerate"] = r.degenerate;
        doc["rows"].push_back(std::move(row));
    }
    nlohmann::ordered_json agg;
    agg["graphs_scanned"] = report.graphs_scanned;
    agg["min_gap"] = report.min_gap;
    agg["violation_count"] = report.violation_count;
    agg["equality_mismatch_count"] = report.equality_mismatch_count;
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (auto [bucket, count] : report.gap_histogram) {
        hist.push_back({{"bucket_low", bucket * 0.1}, {"count", count}});
    }
    agg["gap_histogram"] = std::move(hist);
    agg["violations"] = report.violations;
    doc["aggregates"] = std::move(agg);
    out << doc.dump(2) << '\n';
}

void export_json(const ScanReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    export_json(report, out);
    if (!out.good()) throw IoError("write failed for " + path);
}

namespace {

GapSummary summarize(std::vector<double>& values) {
    GapSummary s;
    std::sort(values.begin(), values.end());
    s.count = static_cast<long>(values.size());
    s.min = values.front();
    s.max = values.back();
    std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    return s;
}

}  // namespace

GapStatistics gap_statistics(const ScanReport& report) {
    if (report.rows.empty())
        throw PreconditionError("gap_statistics: empty report");
    GapStatistics stats;
    std::vector<double> all;
    std::map<int, std::vector<double>> by_n, by_degree;
    for (const ScanRow& r : report.rows) {
        all.push_back(r.squared_gap);
        by_n[r.n].push_back(r.squared_gap);
        by_degree[r.degree].push_back(r.squared_gap);
    }
    stats.overall = summarize(all);
    for (auto& [n, v] : by_n) stats.by_n[n] = summarize(v);
    for (auto& [d, v] : by_degree) stats.by_degree[d] = summarize(v);
    return stats;
}

}  // namespace sdl
