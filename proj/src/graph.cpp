#include "ispwl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ispwl/error.hpp"
#include "ispwl/graph6.hpp"

namespace ispwl {

Graph Graph::from_edges(std::size_t node_count,
                        std::vector<std::pair<NodeId, NodeId>> edges) {
  Graph g;
  for (auto& [u, v] : edges) {
    if (u == v)
      throw ParamError("self-loop at node " + std::to_string(u));
    if (u >= node_count || v >= node_count)
      throw ParamError("edge endpoint " + std::to_string(std::max(u, v)) +
                       " outside node count " + std::to_string(node_count));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.duplicates_ = before - edges.size();
  g.edge_count_ = edges.size();

  std::vector<std::size_t> deg(node_count, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neigh_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neigh_[cursor[u]++] = v;
    g.neigh_[cursor[v]++] = u;
  }
  // u < v insertion order over a sorted edge list leaves each list sorted for
  // the lower endpoint only; sort explicitly to guarantee the invariant.
  for (std::size_t v = 0; v < node_count; ++v)
    std::sort(g.neigh_.begin() + g.offsets_[v], g.neigh_.begin() + g.offsets_[v + 1]);
  return g;
}

void Graph::check_node(NodeId v) const {
  if (v >= node_count())
    throw BoundsError("node " + std::to_string(v) + " out of range (node count " +
                      std::to_string(node_count()) + ")");
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId v = 0; v < node_count(); ++v)
    for (NodeId u : neighbors(v))
      if (v < u) out.emplace_back(v, u);
  return out;
}

TriangleSet triangles(const Graph& g, NodeId v) {
  g.check_node(v);
  TriangleSet out;
  out.center = v;
  const auto nv = g.neighbors(v);
  // For each neighbor u, merge-intersect N(v) with N(u), keeping w > u so
  // every pair appears once in canonical order.
  for (NodeId u : nv) {
    const auto nu = g.neighbors(u);
    auto a = std::upper_bound(nv.begin(), nv.end(), u);
    auto b = std::upper_bound(nu.begin(), nu.end(), u);
    while (a != nv.end() && b != nu.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else {
        out.pairs.emplace_back(u, *a);
        ++a;
        ++b;
      }
    }
  }
  return out;
}

std::vector<std::vector<std::pair<NodeId, NodeId>>> all_triangles(const Graph& g) {
  std::vector<std::vector<std::pair<NodeId, NodeId>>> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = triangles(g, v).pairs;
  return out;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t incident = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) incident += triangles(g, v).pairs.size();
  return incident / 3;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.mapping.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.mapping[i] = static_cast<NodeId>(i);
  return p;
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
  Permutation p = identity(n);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.uniform_index(i);
    std::swap(p.mapping[i - 1], p.mapping[j]);
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.mapping.resize(mapping.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) inv.mapping[mapping[i]] = static_cast<NodeId>(i);
  return inv;
}

void Permutation::validate(std::size_t n) const {
  if (mapping.size() != n)
    throw ParamError("permutation length " + std::to_string(mapping.size()) +
                     " does not match node count " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (NodeId m : mapping) {
    if (m >= n || seen[m]) throw ParamError("mapping is not a bijection");
    seen[m] = true;
  }
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  p.validate(g.node_count());
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p.mapping[u], p.mapping[v]);
  return Graph::from_edges(g.node_count(), std::move(edges));
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::size_t max_id = 0;
  bool any_node = false;
  std::uint64_t header_n = 0;
  bool has_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) continue;
    if (line[start] == '#') continue;

    std::vector<std::string_view> toks;
    std::size_t i = start;
    while (i < line.size()) {
      std::size_t j = line.find_first_of(" \t", i);
      if (j == std::string_view::npos) j = line.size();
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = line.find_first_not_of(" \t", j);
      if (i == std::string_view::npos) break;
    }
    if (toks.size() == 2 && toks[0] == "n") {
      if (!parse_u64(toks[1], header_n))
        throw ParseError("line " + std::to_string(line_no) + ": bad node count header");
      has_header = true;
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two node ids, got '" + std::string(line) + "'");
    std::uint64_t u = 0, v = 0;
    if (!parse_u64(toks[0], u) || !parse_u64(toks[1], v))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two node ids, got '" + std::string(line) + "'");
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at node " +
                       std::to_string(u));
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    max_id = std::max<std::size_t>(max_id, std::max(u, v));
    any_node = true;
  }

  std::size_t n = any_node ? max_id + 1 : 0;
  if (has_header) n = std::max<std::size_t>(n, header_n);
  return Graph::from_edges(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.node_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  const bool g6_ext = path.ends_with(".g6") || path.ends_with(".graph6");
  const bool g6_header = text.starts_with(">>graph6<<");
  if (g6_ext || g6_header) {
    std::string_view line(text);
    if (auto nl = line.find('\n'); nl != std::string_view::npos) line = line.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m)
    throw ParamError("generate_ba requires n > m >= 1 (got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ")");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m * (n - m) + m * (m - 1) / 2);
  // Degree-weighted pool: one entry per edge endpoint.
  std::vector<NodeId> pool;
  pool.reserve(2 * (m * (n - m) + m * (m - 1) / 2));
  for (NodeId u = 0; u < m; ++u)
    for (NodeId v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
      pool.push_back(u);
      pool.push_back(v);
    }
  std::vector<NodeId> targets;
  std::vector<bool> chosen(n, false);
  for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      NodeId t;
      if (pool.empty()) {
        // Only reachable for m = 1 at the first attachment: pick uniformly.
        t = static_cast<NodeId>(rng.uniform_index(v));
      } else {
        t = pool[rng.uniform_index(pool.size())];
      }
      if (chosen[t]) continue;
      chosen[t] = true;
      targets.push_back(t);
    }
    for (NodeId t : targets) {
      chosen[t] = false;
      edges.emplace_back(t, v);
      pool.push_back(t);
      pool.push_back(v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_cycle(std::size_t n) {
  if (n < 3) throw ParamError("cycle requires at least 3 nodes");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_clique(std::size_t n) {
  if (n < 1) throw ParamError("clique requires a positive size");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_disjoint_cliques(std::size_t count, std::size_t size) {
  if (count < 1 || size < 1) throw ParamError("disjoint_cliques requires positive count and size");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t base = c * size;
    for (std::size_t u = 0; u < size; ++u)
      for (std::size_t v = u + 1; v < size; ++v)
        edges.emplace_back(static_cast<NodeId>(base + u), static_cast<NodeId>(base + v));
  }
  return Graph::from_edges(count * size, std::move(edges));
}

Graph generate_path(std::size_t n) {
  if (n < 1) throw ParamError("path requires a positive size");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
  return Graph::from_edges(n, std::move(edges));
}

Graph generate_star(std::size_t leaves) {
  if (leaves < 1) throw ParamError("star requires at least one leaf");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_edges(leaves + 1, std::move(edges));
}

}  // namespace ispwl
