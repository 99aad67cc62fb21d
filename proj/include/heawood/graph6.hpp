#pragma once

// graph6 codec (single-byte size header, n <= 62): size byte chr(n+63), then
// the upper triangle in column-major order ((0,1),(0,2),(1,2),(0,3),...)
// packed big-endian six bits per character, zero padded, each char +63.

#include <string>
#include <string_view>
#include <vector>

#include "heawood/graph.hpp"

namespace heawood {

inline std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 encoding supports n <= 62");
  std::string out;
  out += static_cast<char>(n + 63);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty record");
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte out of printable range 63..126");
  const int n = text[0] - 63;
  if (n == 63) throw std::invalid_argument("graph6: multi-byte size headers not supported (n > 62)");
  if (n < 1) throw std::invalid_argument("graph6: size byte below 1");
  const long long nbits = 1LL * n * (n - 1) / 2;
  const size_t need = 1 + static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != need)
    throw std::invalid_argument("graph6: record length " + std::to_string(text.size()) +
                                ", expected " + std::to_string(need) + " for n=" + std::to_string(n));
  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (long long b = nbits; b < 6 * static_cast<long long>(text.size() - 1); ++b) {
    const int byte = text[1 + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph::build(n, std::move(edges));
}

// One record per line, LF terminated.
inline std::vector<Graph> graph6_parse_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_decode(line));
    pos = nl + 1;
  }
  return out;
}

}  // namespace heawood
