#include "ispwl/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "ispwl/error.hpp"

namespace ispwl {

namespace {

InvariantValues make(const Graph& g, std::string name, std::vector<double> values) {
  InvariantValues out;
  out.invariant_name = std::move(name);
  out.values = std::move(values);
  out.values.resize(g.node_count(), 0.0);
  return out;
}

}  // namespace

InvariantValues degree(const Graph& g) {
  std::vector<double> v(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) v[i] = static_cast<double>(g.degree(i));
  return make(g, "degree", std::move(v));
}

InvariantValues k_core(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling, O(|V| + |E|).
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n), pos(n), bin_start;
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  bin_start.assign(max_deg + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin_start[deg[v] + 1];
  for (std::size_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];
  std::vector<NodeId> order(n);
  {
    std::vector<std::size_t> cur(bin_start.begin(), bin_start.end() - 1);
    for (NodeId v = 0; v < n; ++v) {
      pos[v] = cur[deg[v]]++;
      order[pos[v]] = v;
    }
  }
  std::vector<std::size_t> bin(bin_start.begin(), bin_start.end() - 1);
  std::vector<double> core(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    core[v] = static_cast<double>(deg[v]);
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        // Move u to the front of its bucket, then shift it one bucket down.
        const std::size_t du = deg[u], pu = pos[u], pw = bin[du];
        const NodeId w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return make(g, "core", std::move(core));
}

InvariantValues onion(const Graph& g) {
  // Round-by-round peeling: each round removes every node whose remaining
  // degree is at most the current core threshold; the threshold rises to the
  // minimum remaining degree when it exceeds it.
  const std::size_t n = g.node_count();
  std::vector<std::size_t> deg(n);
  for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<double> layer(n, 0.0);
  std::vector<bool> removed(n, false);
  std::size_t remaining = n;
  std::size_t round = 0;
  std::size_t threshold = 0;
  while (remaining > 0) {
    std::size_t min_deg = SIZE_MAX;
    for (NodeId v = 0; v < n; ++v)
      if (!removed[v]) min_deg = std::min(min_deg, deg[v]);
    threshold = std::max(threshold, min_deg);
    ++round;
    std::vector<NodeId> batch;
    for (NodeId v = 0; v < n; ++v)
      if (!removed[v] && deg[v] <= threshold) batch.push_back(v);
    for (NodeId v : batch) {
      removed[v] = true;
      layer[v] = static_cast<double>(round);
      --remaining;
    }
    for (NodeId v : batch)
      for (NodeId u : g.neighbors(v))
        if (!removed[u]) --deg[u];
  }
  return make(g, "onion", std::move(layer));
}

InvariantValues clustering(const Graph& g) {
  std::vector<double> c(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d < 2) continue;
    const std::size_t t = triangles(g, v).pairs.size();
    c[v] = 2.0 * static_cast<double>(t) / (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return make(g, "clustering", std::move(c));
}

InvariantValues avg_neighborhood_clustering(const Graph& g) {
  const InvariantValues base = clustering(g);
  std::vector<double> out(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    double sum = 0.0;
    for (NodeId u : nb) sum += base.values[u];
    out[v] = sum / static_cast<double>(nb.size());
  }
  return make(g, "anc", std::move(out));
}

InvariantValues k_truss(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto edge_list = g.edges();
  const std::size_t m = edge_list.size();

  // Edge index lookup via binary search over each node's sorted neighbors.
  std::vector<std::size_t> eid_offset(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) eid_offset[v + 1] = eid_offset[v] + g.degree(v);
  std::vector<std::size_t> eid(eid_offset[n], 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = edge_list[e];
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    eid[eid_offset[u] + static_cast<std::size_t>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin())] = e;
    eid[eid_offset[v] + static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin())] = e;
  }
  auto edge_id = [&](NodeId a, NodeId b) {
    const auto na = g.neighbors(a);
    return eid[eid_offset[a] + static_cast<std::size_t>(std::lower_bound(na.begin(), na.end(), b) - na.begin())];
  };

  // Triangle support per edge.
  std::vector<std::size_t> support(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = edge_list[e];
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else {
        ++support[e];
        ++a;
        ++b;
      }
    }
  }

  // Peel edges in nondecreasing support order; trussness = peak threshold + 2.
  std::size_t max_sup = 0;
  for (std::size_t s : support) max_sup = std::max(max_sup, s);
  std::vector<std::vector<std::size_t>> buckets(max_sup + 1);
  for (std::size_t e = 0; e < m; ++e) buckets[support[e]].push_back(e);
  std::vector<bool> gone(m, false);
  std::vector<std::size_t> trussness(m, 2);
  std::size_t threshold = 0;
  std::size_t processed = 0;
  std::size_t cursor = 0;
  while (processed < m) {
    while (cursor <= max_sup && buckets[cursor].empty()) ++cursor;
    const std::size_t e = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (gone[e]) continue;
    if (support[e] != cursor) continue;  // stale bucket entry
    gone[e] = true;
    ++processed;
    threshold = std::max(threshold, support[e]);
    trussness[e] = threshold + 2;
    const auto [u, v] = edge_list[e];
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b)
        ++a;
      else if (*b < *a)
        ++b;
      else {
        const std::size_t e1 = edge_id(u, *a);
        const std::size_t e2 = edge_id(v, *a);
        if (!gone[e1] && !gone[e2]) {
          for (std::size_t ex : {e1, e2}) {
            if (support[ex] > support[e]) {
              --support[ex];
              buckets[support[ex]].push_back(ex);
            }
          }
        }
        ++a;
        ++b;
      }
    }
    if (cursor > 0) --cursor;  // decrements may repopulate lower buckets
  }

  std::vector<double> node_truss(n, 0.0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u, v] = edge_list[e];
    node_truss[u] = std::max(node_truss[u], static_cast<double>(trussness[e]));
    node_truss[v] = std::max(node_truss[v], static_cast<double>(trussness[e]));
  }
  return make(g, "truss", std::move(node_truss));
}

InvariantValues pagerank(const Graph& g, double damping, std::size_t iterations) {
  if (!(damping > 0.0 && damping < 1.0))
    throw ParamError("pagerank damping must lie in (0, 1)");
  if (iterations < 1) throw ParamError("pagerank requires at least one iteration");
  const std::size_t n = g.node_count();
  std::vector<double> pr(n, n ? 1.0 / static_cast<double>(n) : 0.0), next(n, 0.0);
  if (n == 0) return make(g, "pagerank", std::move(pr));
  for (std::size_t it = 0; it < iterations; ++it) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += pr[v];
    const double base = (1.0 - damping) / static_cast<double>(n) +
                        damping * dangling / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) continue;
      const double share = damping * pr[v] / static_cast<double>(g.degree(v));
      for (NodeId u : g.neighbors(v)) next[u] += share;
    }
    const double sum = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& x : next) x /= sum;
    pr.swap(next);
  }
  return make(g, "pagerank", std::move(pr));
}

InvariantValues eigenvector_centrality(const Graph& g, std::size_t iterations, double tolerance) {
  if (g.edge_count() == 0)
    throw ParamError("eigenvector centrality is degenerate on an edgeless graph");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), next(n, 0.0);
  for (std::size_t it = 0; it < iterations; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      double s = 0.0;
      for (NodeId u : g.neighbors(v)) s += x[u];
      next[v] = s;
    }
    double norm = 0.0;
    for (double t : next) norm += t * t;
    norm = std::sqrt(norm);
    for (double& t : next) t /= norm;
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - x[i]));
    x.swap(next);
    if (diff < tolerance) break;
  }
  return make(g, "eigenvector", std::move(x));
}

InvariantValues betweenness(const Graph& g) {
  // Brandes dependency accumulation; undirected, so pair contributions are
  // halved at the end.
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> pred(n);
  std::queue<NodeId> q;
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : pred) p.clear();
    stack.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    q.push(s);
    while (!q.empty()) {
      const NodeId v = q.front();
      q.pop();
      stack.push_back(v);
      for (NodeId u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
        if (dist[u] == dist[v] + 1) {
          sigma[u] += sigma[v];
          pred[u].push_back(v);
        }
      }
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  for (double& x : bc) x /= 2.0;
  return make(g, "betweenness", std::move(bc));
}

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "degree", "core", "onion", "clustering", "anc",
      "truss",  "pagerank", "eigenvector", "betweenness"};
  return names;
}

bool is_invariant_name(std::string_view name) {
  for (const auto& n : invariant_names())
    if (n == name) return true;
  return false;
}

bool invariant_is_integer_valued(std::string_view name) {
  return name == "degree" || name == "core" || name == "onion" || name == "truss";
}

InvariantValues compute_invariant(const Graph& g, std::string_view name,
                                  const std::string& graph_id) {
  InvariantValues out;
  if (name == "degree")
    out = degree(g);
  else if (name == "core")
    out = k_core(g);
  else if (name == "onion")
    out = onion(g);
  else if (name == "clustering")
    out = clustering(g);
  else if (name == "anc")
    out = avg_neighborhood_clustering(g);
  else if (name == "truss")
    out = k_truss(g);
  else if (name == "pagerank")
    out = pagerank(g);
  else if (name == "eigenvector")
    out = eigenvector_centrality(g);
  else if (name == "betweenness")
    out = betweenness(g);
  else {
    std::string msg = "unknown invariant '" + std::string(name) + "'; valid names:";
    for (const auto& n : invariant_names()) msg += " " + n;
    throw ParamError(msg);
  }
  out.graph_id = graph_id;
  return out;
}

}  // namespace ispwl
