#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// graph6 encoding: order header (1 byte for n < 63, '~' + 3 bytes for
/// n < 258048) followed by the upper triangle in column-major order
/// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte + 63.
std::string encode_graph6(const Graph& g);

/// Strict decoder. Rejects bytes outside [63,126], wrong lengths and non-zero
/// padding bits; Graph6Error carries the offending byte offset.
Graph decode_graph6(std::string_view text);

/// One graph per line; blank lines are skipped, an optional ">>graph6<<"
/// header is accepted on the first line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<std::string>& lines);

}  // namespace sturan
