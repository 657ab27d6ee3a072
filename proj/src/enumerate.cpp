#include "sdl/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>

#include "sdl/graph6.hpp"

namespace sdl {

namespace {

// Pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

int pair_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > 10)
        throw LimitError("canonical_form: brute-force canonicalization capped at n <= 10");
    if (n == 1) return graph6_write(g);

    const auto pairs = pair_list(n);
    const int nbits = static_cast<int>(pairs.size());

    // Minimize the upper-triangle bit string over all relabelings; bit k of
    // the string is stored at position nbits-1-k so numeric order on the
    // mask equals lexicographic order on the string.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t m = 0;
        for (int k = 0; k < nbits; ++k) {
            if (g.has_edge(perm[pairs[k].first], perm[pairs[k].second]))
                m |= 1ULL << (nbits - 1 - k);
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Graph canon(n);
    for (int k = 0; k < nbits; ++k)
        if ((best >> (nbits - 1 - k)) & 1)
            canon.add_edge(pairs[k].first, pairs[k].second);
    return graph6_write(canon);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw PreconditionError("enumerate_connected: n must be >= 1");
    if (n > 7)
        throw LimitError(
            "enumerate_connected: capped at n <= 7 (cost grows as all labeled "
            "graphs times n! canonicalization); ingest a graph6 file instead");

    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }

    const auto pairs = pair_list(n);
    const int nbits = static_cast<int>(pairs.size());

    // Per-pair vertex lookup indexed by bit position.
    std::vector<std::uint8_t> pa(nbits), pb(nbits);
    for (int k = 0; k < nbits; ++k) {
        pa[nbits - 1 - k] = static_cast<std::uint8_t>(pairs[k].first);
        pb[nbits - 1 - k] = static_cast<std::uint8_t>(pairs[k].second);
    }

    // For every non-identity permutation, the bit position each string slot
    // reads from in the original mask. A mask is canonical iff no permutation
    // produces a lexicographically smaller string.
    std::vector<std::uint8_t> table;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            for (int k = 0; k < nbits; ++k) {
                int a = perm[pairs[k].first], b = perm[pairs[k].second];
                if (a > b) std::swap(a, b);
                table.push_back(static_cast<std::uint8_t>(nbits - 1 - pair_index(a, b)));
            }
        }
    }
    const std::size_t nperms = table.size() / nbits;

    for (std::uint32_t mask = 0; mask < (1U << nbits); ++mask) {
        if (std::popcount(mask) < n - 1) continue;  // too few edges to connect

        std::uint8_t rows[8] = {};
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            int pos = std::countr_zero(bits);
            rows[pa[pos]] |= static_cast<std::uint8_t>(1U << pb[pos]);
            rows[pb[pos]] |= static_cast<std::uint8_t>(1U << pa[pos]);
        }

        std::uint32_t visited = 1;
        for (;;) {
            std::uint32_t next = visited;
            for (std::uint32_t f = visited; f; f &= f - 1) next |= rows[std::countr_zero(f)];
            if (next == visited) break;
            visited = next;
        }
        if (visited != (1U << n) - 1) continue;

        bool canonical = true;
        const std::uint8_t* row = table.data();
        for (std::size_t p = 0; p < nperms; ++p, row += nbits) {
            for (int k = 0; k < nbits; ++k) {
                std::uint32_t cand = (mask >> row[k]) & 1;
                std::uint32_t self = (mask >> (nbits - 1 - k)) & 1;
                if (cand != self) {
                    if (cand < self) canonical = false;
                    break;
                }
            }
            if (!canonical) break;
        }
        if (!canonical) continue;

        Graph g(n);
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            int pos = std::countr_zero(bits);
            g.add_edge(pa[pos], pb[pos]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace sdl
