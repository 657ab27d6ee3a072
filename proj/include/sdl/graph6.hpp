#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdl/graph.hpp"

namespace sdl {

/// Parse one graph6 small-format line (n <= 62). A leading ">>graph6<<"
/// header is stripped. Rejects long formats, truncated payloads, nonzero
/// padding bits and bytes outside [63, 126].
Graph graph6_parse(std::string_view line);

/// Encode as graph6 small format: byte 0 is n+63, then the upper-triangle
/// bits x(i,j) in column order (0,1), (0,2), (1,2), (0,3), ... packed
/// big-endian into 6-bit groups, zero-padded, each group +63.
std::string graph6_write(const Graph& g);

/// Read a graph-per-line file. Blank lines are skipped; parse errors carry
/// the 1-based line number.
std::vector<Graph> graph6_read_file(const std::string& path);

}  // namespace sdl
