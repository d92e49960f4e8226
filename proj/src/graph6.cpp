#include "sturan/graph6.hpp"

#include <algorithm>
#include <fstream>

#include "sturan/error.hpp"

namespace sturan {

namespace {

constexpr int kBias = 63;

void append_order(std::string& out, int n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
}

int byte_value(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw Graph6Error("graph6: byte value " + std::to_string(c) + " outside [63,126]", pos);
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("graph6: empty input", 0);
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = byte_value(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error("graph6: truncated 8-byte order header", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte_value(text, i);
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated 4-byte order header", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte_value(text, i);
    if (n < 63) throw Graph6Error("graph6: non-minimal order header", 0);
    pos = 4;
  }
  if (n > kMaxOrder) throw SizeCapError("graph6: order " + std::to_string(n) + " exceeds cap");

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw Graph6Error("graph6: expected " + std::to_string(expected) + " bytes, found " + std::to_string(text.size()),
                      std::min(text.size(), expected));

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte_value(text, at) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte_value(text, at) & pad_mask) throw Graph6Error("graph6: non-zero padding bits", at);
  }
  return b.build();
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph6 file", path.string());
  std::vector<Graph> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    first = false;
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write graph6 file", path.string());
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw IoError("write failed", path.string());
}

}  // namespace sturan
