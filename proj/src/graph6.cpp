#include "sdl/graph6.hpp"

#include <fstream>
#include <string>

namespace sdl {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view strip_line(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    return line;
}

}  // namespace

Graph graph6_parse(std::string_view line) {
    line = strip_line(line);
    if (line.empty()) throw Graph6ParseError("graph6: empty line");

    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = line[i];
        if (c < 63 || c > 126)
            throw Graph6ParseError("graph6: byte " + std::to_string(i) +
                                   " (value " + std::to_string(c) +
                                   ") outside [63, 126]");
    }

    unsigned char header = line[0];
    if (header == 126)
        throw Graph6ParseError("graph6: long format (n > 62) not supported");
    int n = header - 63;
    if (n < 1) throw Graph6ParseError("graph6: n = 0 is not a valid graph here");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    const int payload = static_cast<int>(line.size()) - 1;
    if (payload < nbytes)
        throw Graph6ParseError("graph6: truncated payload, need " +
                               std::to_string(nbytes) + " bytes, got " +
                               std::to_string(payload));
    if (payload > nbytes)
        throw Graph6ParseError("graph6: unexpected trailing bytes after payload");

    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int group = line[1 + k / 6] - 63;
            if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < nbytes * 6; ++k) {
        int group = line[1 + k / 6] - 63;
        if ((group >> (5 - k % 6)) & 1)
            throw Graph6ParseError("graph6: nonzero padding bit " + std::to_string(k));
    }
    return g;
}

std::string graph6_write(const Graph& g) {
    const int n = g.n();
    if (n > 62)
        throw LimitError("graph6_write: small format covers n <= 62, got n=" +
                         std::to_string(n));
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;

    std::string out(1 + nbytes, static_cast<char>(63));
    out[0] = static_cast<char>(n + 63);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) out[1 + k / 6] += 1 << (5 - k % 6);
        }
    }
    return out;
}

std::vector<Graph> graph6_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (strip_line(line).empty()) continue;
        try {
            out.push_back(graph6_parse(line));
        } catch (const Graph6ParseError& e) {
            throw Graph6ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace sdl
