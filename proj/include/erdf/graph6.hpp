#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "erdf/graph.hpp"

namespace erdf {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

// One graph6 record, no ">>graph6<<" header, no trailing newline.
// Only the single-byte size form (n <= 62) is supported; that covers every
// corpus this tooling works with.
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 record", 0);
  unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == 126) throw parse_error("multi-byte size encoding unsupported (n > 62)", 0);
  if (c0 < 63 || c0 > 126) throw parse_error("malformed length prefix", 0);
  int n = c0 - 63;

  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw parse_error("record too short for n=" + std::to_string(n), text.size());
  if (text.size() > 1 + body) throw parse_error("trailing bytes after record", 1 + body);

  Graph g(n);
  size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      size_t byte = 1 + bit / 6;
      unsigned char c = static_cast<unsigned char>(text[byte]);
      if (c < 63 || c > 126) throw parse_error("out-of-range byte", byte);
      if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
    }
  // padding bits of the last byte must be zero
  for (; bit < body * 6; ++bit) {
    size_t byte = 1 + bit / 6;
    unsigned char c = static_cast<unsigned char>(text[byte]);
    if (c < 63 || c > 126) throw parse_error("out-of-range byte", byte);
    if ((c - 63) >> (5 - bit % 6) & 1) throw parse_error("nonzero trailing bits", byte);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("emit_graph6 supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, fill = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = fill = 0;
      }
    }
  if (fill > 0) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

}  // namespace erdf
