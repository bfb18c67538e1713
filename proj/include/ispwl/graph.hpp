#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ispwl/rng.hpp"

namespace ispwl {

using NodeId = std::uint32_t;

// Immutable undirected simple graph in compressed adjacency form.
// Neighbor lists are strictly increasing, which makes triangle tests a
// two-sequence merge and keeps everything deterministic.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Duplicate edges are collapsed (counted in
  // duplicate_edges_collapsed); self-loops throw ParamError.
  static Graph from_edges(std::size_t node_count,
                          std::vector<std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neigh_.data() + offsets_[v], neigh_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;
  void check_node(NodeId v) const;  // BoundsError if v >= node_count

  std::size_t duplicate_edges_collapsed() const { return duplicates_; }

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neigh_;
  std::size_t edge_count_ = 0;
  std::size_t duplicates_ = 0;
};

// Neighbor pairs of `center` that close triangles, canonical (u < w) order.
struct TriangleSet {
  NodeId center = 0;
  std::vector<std::pair<NodeId, NodeId>> pairs;
};

TriangleSet triangles(const Graph& g, NodeId v);

// Per-node triangle pair lists for the whole graph in one pass (the refine
// engine's preprocessing step). Same contents as calling triangles() per node.
std::vector<std::vector<std::pair<NodeId, NodeId>>> all_triangles(const Graph& g);

// Global triangle count (each triangle counted once).
std::size_t triangle_count(const Graph& g);

// Bijection on {0..n-1}. mapping[old_id] = new_id.
struct Permutation {
  std::vector<NodeId> mapping;

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, Rng& rng);
  Permutation inverse() const;
  void validate(std::size_t n) const;  // ParamError unless a bijection of size n
};

Graph apply_permutation(const Graph& g, const Permutation& p);

// --- parsing / serialization -------------------------------------------------

// Line-oriented edge list: `u v` per line, `#` comments, optional `n <count>`
// header raising the node count. Throws ParseError (with line number) or
// ParamError on self-loops.
Graph parse_edge_list(std::string_view text);

// Emits `n <count>` header plus one `u v` line per edge, sorted; byte-stable.
std::string write_edge_list(const Graph& g);

// Reads a graph file; `.g6` / `.graph6` extensions and the `>>graph6<<` header
// select graph6, anything else is treated as an edge list.
Graph read_graph_file(const std::string& path);

// --- generators ---------------------------------------------------------------

// Barabasi-Albert preferential attachment: K_m seed clique, then each new node
// attaches to m distinct targets sampled from the degree-weighted pool.
// edge_count = C(m,2) + m*(n-m). Deterministic for a fixed seed.
Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed);

Graph generate_cycle(std::size_t n);            // n >= 3
Graph generate_clique(std::size_t n);           // n >= 1
Graph generate_disjoint_cliques(std::size_t count, std::size_t size);
Graph generate_path(std::size_t n);             // n >= 1
Graph generate_star(std::size_t leaves);        // leaves >= 1; center is node 0

}  // namespace ispwl
