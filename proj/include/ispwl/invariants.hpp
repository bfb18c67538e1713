#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ispwl/graph.hpp"

namespace ispwl {

// One real value per node of a single graph.
struct InvariantValues {
  std::string invariant_name;
  std::string graph_id;
  std::vector<double> values;
};

InvariantValues degree(const Graph& g);
InvariantValues k_core(const Graph& g);
// Peeling-round index of the onion decomposition, 1-based.
InvariantValues onion(const Graph& g);
InvariantValues clustering(const Graph& g);
InvariantValues avg_neighborhood_clustering(const Graph& g);
// Node value = max trussness over incident edges (0 for isolated nodes).
InvariantValues k_truss(const Graph& g);
// Power iteration with uniform teleport; the iterate is renormalized each step
// so values sum to exactly 1. Isolated nodes act as dangling mass spread
// uniformly. ParamError unless 0 < damping < 1 and iterations >= 1.
InvariantValues pagerank(const Graph& g, double damping = 0.85, std::size_t iterations = 100);
// Power iteration on the adjacency operator, L2-normalized per step; stops at
// the cap or when the L-inf change drops below tolerance. ParamError on
// edgeless graphs.
InvariantValues eigenvector_centrality(const Graph& g, std::size_t iterations = 100,
                                       double tolerance = 1e-9);
// Exact unnormalized betweenness (Brandes), endpoints excluded.
InvariantValues betweenness(const Graph& g);

// Name registry used by the CLI and the refinement harness.
const std::vector<std::string>& invariant_names();
bool is_invariant_name(std::string_view name);
// Integer-valued invariants get exact rank grouping; the rest use a tolerance.
bool invariant_is_integer_valued(std::string_view name);
// ParamError listing valid names on an unknown invariant.
InvariantValues compute_invariant(const Graph& g, std::string_view name,
                                  const std::string& graph_id = "");

}  // namespace ispwl
