#include "ispwl/graph6.hpp"

#include <cstdint>

#include "ispwl/error.hpp"

namespace ispwl {

namespace {

constexpr int kBias = 63;     // printable offset
constexpr int kEscape = 126;  // '~'

int byte_value(std::string_view s, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte " + std::to_string(i) + " out of range");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(line[0]) != kEscape) {
    n = static_cast<std::uint64_t>(byte_value(line, 0));
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) != kEscape) {
    if (line.size() < 4) throw ParseError("graph6: truncated node count");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_value(line, i));
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated node count");
    n = 0;
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_value(line, i));
    pos = 8;
  }

  if (n > 50'000'000) throw ParseError("graph6: node count too large");
  const std::uint64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " payload bytes, got " +
                     std::to_string(line.size() - pos));

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t bit = 0;
  for (NodeId v = 1; v < n; ++v)
    for (NodeId u = 0; u < v; ++u, ++bit) {
      const int b = byte_value(line, pos + static_cast<std::size_t>(bit / 6));
      if (b & (1 << (5 - bit % 6))) edges.emplace_back(u, v);
    }
  // Trailing padding bits must be zero.
  for (std::uint64_t p = bits; p < need * 6; ++p) {
    const int b = byte_value(line, pos + static_cast<std::size_t>(p / 6));
    if (b & (1 << (5 - p % 6))) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.node_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kEscape));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  } else {
    out.push_back(static_cast<char>(kEscape));
    out.push_back(static_cast<char>(kEscape));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }

  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<int> payload((bits + 5) / 6, 0);
  std::uint64_t bit = 0;
  for (NodeId v = 1; v < n; ++v)
    for (NodeId u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) payload[bit / 6] |= 1 << (5 - bit % 6);
  for (int b : payload) out.push_back(static_cast<char>(b + kBias));
  return out;
}

}  // namespace ispwl
