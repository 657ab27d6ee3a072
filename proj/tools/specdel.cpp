// specdel: spectral vertex-deletion bound toolkit.
//
// Subcommands: check, certify, scan, encode, decode.
// Exit codes: 0 success, 1 usage or input error, 2 a mathematical invariant
// the library vouches for failed (implementation-bug signal).

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdl/bounds.hpp"
#include "sdl/enumerate.hpp"
#include "sdl/graph.hpp"
#include "sdl/graph6.hpp"
#include "sdl/scan.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw sdl::PreconditionError(std::string("bad ") + what + ": '" +
                                     std::string(text) + "'");
    return value;
}

// GraphSpec grammar:
//   g6:<line> | K<n> | S<n> | P<n> | C<n> | ER:<n>,<p>,<seed> | file:<path>
sdl::Graph parse_graph_spec(const std::string& spec) {
    if (spec.starts_with("g6:")) return sdl::graph6_parse(spec.substr(3));
    if (spec.starts_with("file:")) {
        auto graphs = sdl::graph6_read_file(spec.substr(5));
        if (graphs.empty())
            throw sdl::PreconditionError("file '" + spec.substr(5) + "' holds no graphs");
        return graphs.front();
    }
    if (spec.starts_with("ER:")) {
        std::string rest = spec.substr(3);
        auto c1 = rest.find(',');
        auto c2 = rest.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw sdl::PreconditionError("ER spec needs ER:<n>,<p>,<seed>");
        int n = parse_int(rest.substr(0, c1), "ER n");
        double p = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        int seed = parse_int(rest.substr(c2 + 1), "ER seed");
        return sdl::erdos_renyi(n, p, static_cast<std::uint64_t>(seed));
    }
    if (!spec.empty() && std::string("KSPC").find(spec[0]) != std::string::npos) {
        int n = parse_int(std::string_view(spec).substr(1), "family size");
        switch (spec[0]) {
            case 'K': return sdl::complete(n);
            case 'S': return sdl::star(n);
            case 'P': return sdl::path(n);
            case 'C': return sdl::cycle(n);
        }
    }
    throw sdl::PreconditionError(
        "unrecognized graph spec '" + spec +
        "' (expected g6:<line>, K<n>, S<n>, P<n>, C<n>, ER:<n>,<p>,<seed>, file:<path>)");
}

struct CommonOpts {
    double num_tol = 1e-8;
    double eq_tol = 1e-7;
    double eigen_tol = 1e-12;
    double degeneracy = 1e-6;
    bool json = false;
    bool quiet = false;

    sdl::Tolerances tolerances() const {
        sdl::Tolerances t;
        t.num_tol = num_tol;
        t.eq_tol = eq_tol;
        t.eigen_tol = eigen_tol;
        t.psd_tol = num_tol;
        t.degeneracy = degeneracy;
        return t;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool json_flag = true) {
    cmd->add_option("--tol", opts.num_tol, "numeric slack for inequality checks")
        ->envname("SDL_TOL");
    cmd->add_option("--eq-tol", opts.eq_tol, "equality detection threshold");
    cmd->add_option("--eigen-tol", opts.eigen_tol, "Jacobi convergence tolerance");
    cmd->add_option("--degen-tol", opts.degeneracy,
                    "lambda - mu at or below this skips matrix certificates");
    if (json_flag) cmd->add_flag("--json", opts.json, "emit a single JSON document");
    cmd->add_flag("--quiet", opts.quiet, "suppress human-readable output");
}

std::optional<bool> predicted_equality(const sdl::Graph& g, int vertex) {
    if (!g.is_connected()) return std::nullopt;
    return sdl::equality_characterization(g, vertex);
}

int cmd_check(const std::string& spec, int vertex, const CommonOpts& opts) {
    sdl::Graph g = parse_graph_spec(spec);
    sdl::DeletionReport rep = sdl::deletion_report(g, vertex, opts.tolerances());
    auto predicted = predicted_equality(g, vertex);

    if (opts.json) {
        ordered_json doc;
        doc["graph6"] = sdl::graph6_write(g);
        doc["n"] = g.n();
        doc["vertex"] = vertex;
        doc["degree"] = rep.degree;
        doc["lambda"] = rep.lambda;
        doc["mu"] = rep.mu;
        doc["bound"] = rep.bound;
        doc["gap"] = rep.gap;
        doc["squared_gap"] = rep.squared_gap;
        doc["equality"] = rep.equality;
        if (predicted)
            doc["equality_predicted"] = *predicted;
        else
            doc["equality_predicted"] = nullptr;
        std::cout << doc.dump(2) << '\n';
    } else if (!opts.quiet) {
        std::cout << "graph       : " << sdl::graph6_write(g) << "  (n=" << g.n()
                  << ", m=" << g.edge_count()
                  << (g.is_connected() ? ", connected" : ", disconnected") << ")\n"
                  << "vertex      : " << vertex << "  (degree " << rep.degree << ")\n"
                  << "lambda      : " << fmt12(rep.lambda) << '\n'
                  << "mu          : " << fmt12(rep.mu) << '\n'
                  << "bound       : " << fmt12(rep.bound) << '\n'
                  << "gap         : " << fmt12(rep.gap) << '\n'
                  << "squared gap : " << fmt12(rep.squared_gap) << '\n'
                  << "equality    : " << (rep.equality ? "yes" : "no")
                  << "  (predicted: "
                  << (predicted ? (*predicted ? "yes" : "no") : "n/a, disconnected")
                  << ")\n";
    }
    return rep.gap < -opts.num_tol ? 2 : 0;
}

int cmd_certify(const std::string& spec, int vertex, const CommonOpts& opts) {
    sdl::Graph g = parse_graph_spec(spec);
    sdl::Tolerances tol = opts.tolerances();
    sdl::Certificate c = sdl::proof_certificate(g, vertex, tol);

    if (opts.json) {
        ordered_json doc;
        doc["graph6"] = sdl::graph6_write(g);
        doc["vertex"] = vertex;
        doc["degree"] = c.degree;
        doc["lambda"] = c.lambda;
        doc["mu"] = c.mu;
        doc["degenerate"] = c.degenerate;
        doc["schur_residual"] = c.schur_residual ? ordered_json(*c.schur_residual) : nullptr;
        doc["m_min_eig"] = c.m_min_eig ? ordered_json(*c.m_min_eig) : nullptr;
        doc["btMb"] = c.btMb ? ordered_json(*c.btMb) : nullptr;
        doc["identity_lhs"] = c.identity_lhs ? ordered_json(*c.identity_lhs) : nullptr;
        doc["nbhd_edge_sum"] = c.nbhd_edge_sum;
        doc["avg_deg_F"] = c.avg_deg_F;
        doc["avg_deg_margin"] = c.avg_deg_margin ? ordered_json(*c.avg_deg_margin) : nullptr;
        doc["m_leq_lambda_dm1"] = c.m_leq_lambda_dm1;
        std::cout << doc.dump(2) << '\n';
    } else if (!opts.quiet) {
        std::cout << "graph            : " << sdl::graph6_write(g) << "  (n=" << g.n() << ")\n"
                  << "vertex           : " << vertex << "  (degree " << c.degree << ")\n"
                  << "lambda           : " << fmt12(c.lambda) << '\n'
                  << "mu               : " << fmt12(c.mu) << '\n';
        if (c.degenerate) {
            std::cout << "degenerate       : yes (lambda - mu = " << fmt12(c.lambda - c.mu)
                      << " <= " << fmt12(tol.degeneracy)
                      << "; Schur and M certificates skipped: lambda I - B is "
                         "numerically singular)\n";
        } else {
            std::cout << "schur_residual   : " << fmt12(*c.schur_residual) << '\n'
                      << "m_min_eig        : " << fmt12(*c.m_min_eig) << '\n'
                      << "btMb             : " << fmt12(*c.btMb) << '\n'
                      << "identity_lhs     : " << fmt12(*c.identity_lhs) << '\n';
        }
        std::cout << "nbhd_edge_sum    : " << c.nbhd_edge_sum << '\n'
                  << "avg_deg_F        : " << fmt12(c.avg_deg_F) << '\n';
        if (c.avg_deg_margin)
            std::cout << "avg_deg_margin        : " << fmt12(*c.avg_deg_margin) << '\n';
        else
            std::cout << "avg_deg_margin        : (absent, d(v) = 1)\n";
        std::cout << "m <= lambda(d-1) : " << (c.m_leq_lambda_dm1 ? "true" : "false") << '\n';
    }

    bool bad = !c.m_leq_lambda_dm1;
    if (!c.degenerate) {
        bad = bad || *c.schur_residual >= tol.num_tol || *c.m_min_eig < -tol.psd_tol ||
              std::abs(*c.identity_lhs - *c.btMb) >= tol.eq_tol;
    }
    if (c.avg_deg_margin && *c.avg_deg_margin < -1e-12) bad = true;
    return bad ? 2 : 0;
}

struct ScanCli {
    int nmax = 0;
    int nmin = 2;
    std::string random_spec;
    std::string file;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string csv_path;
    std::string json_path;
    std::string checks = "bound,certificates,hong,nikiforov,corollary,equality";
};

sdl::ScanConfig make_scan_config(const ScanCli& cli, const CommonOpts& opts) {
    sdl::ScanConfig cfg;
    cfg.tol = opts.tolerances();
    cfg.jobs = cli.jobs;

    int sources = (cli.nmax > 0) + !cli.random_spec.empty() + !cli.file.empty();
    if (sources != 1)
        throw sdl::PreconditionError(
            "scan needs exactly one source: --nmax, --random or --file");

    if (cli.nmax > 0) {
        cfg.source = sdl::ScanConfig::Source::Enumerate;
        cfg.n_min = cli.nmin;
        cfg.n_max = cli.nmax;
    } else if (!cli.random_spec.empty()) {
        cfg.source = sdl::ScanConfig::Source::Random;
        auto c1 = cli.random_spec.find(',');
        auto c2 = cli.random_spec.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw sdl::PreconditionError("--random needs <n>,<p>,<trials>");
        cfg.rand_n = parse_int(cli.random_spec.substr(0, c1), "random n");
        cfg.rand_p = std::stod(cli.random_spec.substr(c1 + 1, c2 - c1 - 1));
        cfg.trials = parse_int(cli.random_spec.substr(c2 + 1), "random trials");
        cfg.seed = cli.seed;
    } else {
        cfg.source = sdl::ScanConfig::Source::File;
        cfg.path = cli.file;
    }

    cfg.checks = {};
    cfg.checks.bound = cfg.checks.certificates = cfg.checks.hong =
        cfg.checks.nikiforov = cfg.checks.corollary = cfg.checks.equality = false;
    std::string list = cli.checks;
    while (!list.empty()) {
        auto comma = list.find(',');
        std::string item = list.substr(0, comma);
        list = comma == std::string::npos ? "" : list.substr(comma + 1);
        if (item == "bound")
            cfg.checks.bound = true;
        else if (item == "certificates")
            cfg.checks.certificates = true;
        else if (item == "hong")
            cfg.checks.hong = true;
        else if (item == "nikiforov")
            cfg.checks.nikiforov = true;
        else if (item == "corollary")
            cfg.checks.corollary = true;
        else if (item == "equality")
            cfg.checks.equality = true;
        else if (!item.empty())
            throw sdl::PreconditionError("unknown check '" + item + "'");
    }
    return cfg;
}

int cmd_scan(const ScanCli& cli, const CommonOpts& opts) {
    sdl::ScanConfig cfg = make_scan_config(cli, opts);
    sdl::ScanReport report = sdl::run_scan(cfg);

    if (!cli.csv_path.empty()) sdl::export_csv(report, cli.csv_path);
    if (!cli.json_path.empty()) sdl::export_json(report, cli.json_path);

    if (!opts.quiet) {
        std::cout << "graphs scanned      : " << report.graphs_scanned << '\n'
                  << "rows (graph,vertex) : " << report.rows.size() << '\n'
                  << "violations          : " << report.violation_count << '\n'
                  << "equality mismatches : " << report.equality_mismatch_count << '\n'
                  << "min gap             : " << fmt12(report.min_gap) << '\n';
        if (!report.rows.empty()) {
            sdl::GapStatistics stats = sdl::gap_statistics(report);
            std::cout << "squared gap         : min " << fmt12(stats.overall.min)
                      << ", median " << fmt12(stats.overall.median) << ", max "
                      << fmt12(stats.overall.max) << '\n';
            std::cout << "by n:\n";
            for (auto& [n, s] : stats.by_n)
                std::cout << "  n=" << n << "  min " << fmt12(s.min) << ", median "
                          << fmt12(s.median) << ", max " << fmt12(s.max) << "  ("
                          << s.count << " rows)\n";
            std::cout << "by degree:\n";
            for (auto& [d, s] : stats.by_degree)
                std::cout << "  d=" << d << "  min " << fmt12(s.min) << ", median "
                          << fmt12(s.median) << ", max " << fmt12(s.max) << "  ("
                          << s.count << " rows)\n";
        }
        for (const auto& v : report.violations) std::cout << "VIOLATION " << v << '\n';
    }
    return (report.violation_count || report.equality_mismatch_count) ? 2 : 0;
}

int cmd_encode(const std::string& spec, const CommonOpts& opts) {
    sdl::Graph g = parse_graph_spec(spec);
    std::string line = sdl::graph6_write(g);
    if (opts.json) {
        ordered_json doc;
        doc["graph6"] = line;
        doc["n"] = g.n();
        doc["m"] = g.edge_count();
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << line << '\n';
    }
    return 0;
}

int cmd_decode(const std::string& text, const CommonOpts& opts) {
    sdl::Graph g = sdl::graph6_parse(text);
    if (opts.json) {
        ordered_json doc;
        doc["n"] = g.n();
        doc["m"] = g.edge_count();
        ordered_json edges = ordered_json::array();
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                if (g.has_edge(i, j)) edges.push_back({i, j});
        doc["edges"] = std::move(edges);
        std::cout << doc.dump(2) << '\n';
    } else if (!opts.quiet) {
        std::cout << "n=" << g.n() << " m=" << g.edge_count() << '\n';
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                if (g.has_edge(i, j)) std::cout << i << '-' << j << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral vertex-deletion bound toolkit"};
    app.require_subcommand(1);

    CommonOpts check_opts, certify_opts, scan_opts, encode_opts, decode_opts;
    std::string check_graph, certify_graph, encode_spec, decode_text;
    int check_vertex = 0, certify_vertex = 0;
    ScanCli scan_cli;

    auto* check = app.add_subcommand("check", "evaluate the deletion bound for (G, v)");
    check->add_option("--graph", check_graph, "graph spec")->required();
    check->add_option("--vertex", check_vertex, "vertex index")->required();
    add_common(check, check_opts);

    auto* certify = app.add_subcommand("certify", "numerical proof certificate for (G, v)");
    certify->add_option("--graph", certify_graph, "graph spec")->required();
    certify->add_option("--vertex", certify_vertex, "vertex index")->required();
    add_common(certify, certify_opts);

    auto* scan = app.add_subcommand("scan", "sweep a graph corpus and verify every check");
    scan->add_option("--nmax", scan_cli.nmax, "enumerate connected graphs on nmin..nmax vertices");
    scan->add_option("--nmin", scan_cli.nmin, "lower bound for --nmax enumeration (default 2)");
    scan->add_option("--random", scan_cli.random_spec, "random source: <n>,<p>,<trials>");
    scan->add_option("--file", scan_cli.file, "graph6 file source");
    scan->add_option("--seed", scan_cli.seed, "seed for --random");
    scan->add_option("--jobs", scan_cli.jobs, "worker count (1 = serial, 0 = all cores)");
    scan->add_option("--csv", scan_cli.csv_path, "write the row table as CSV");
    scan->add_option("--json", scan_cli.json_path, "write the full report as JSON");
    scan->add_option("--checks", scan_cli.checks, "comma list of checks to enforce");
    add_common(scan, scan_opts, /*json_flag=*/false);

    auto* encode = app.add_subcommand("encode", "graph spec -> graph6 line");
    encode->add_option("spec", encode_spec, "graph spec")->required();
    add_common(encode, encode_opts);

    auto* decode = app.add_subcommand("decode", "graph6 line -> edge list");
    decode->add_option("text", decode_text, "graph6 line")->required();
    add_common(decode, decode_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*check) return cmd_check(check_graph, check_vertex, check_opts);
        if (*certify) return cmd_certify(certify_graph, certify_vertex, certify_opts);
        if (*scan) return cmd_scan(scan_cli, scan_opts);
        if (*encode) return cmd_encode(encode_spec, encode_opts);
        if (*decode) return cmd_decode(decode_text, decode_opts);
    } catch (const sdl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
