#include "antimagic/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Incidence& inc, VertexId x) { return inc.neighbor < x; });
  if (it == adj.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_list) {
  using Reason = InvalidGraphError::Reason;
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) {
    const auto id = static_cast<EdgeId>(g.edges_.size());
    if (u >= vertex_count || v >= vertex_count)
      throw InvalidGraphError(Reason::EndpointOutOfRange,
                              "edge " + std::to_string(id) + " (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") has an endpoint >= " + std::to_string(vertex_count));
    if (u == v)
      throw InvalidGraphError(Reason::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.edges_.push_back({id, u, v});
    g.adjacency_[u].push_back({v, id});
    g.adjacency_[v].push_back({u, id});
  }
  for (auto& adj : g.adjacency_) {
    std::stable_sort(adj.begin(), adj.end(),
                     [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    auto dup = std::adjacent_find(adj.begin(), adj.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor == b.neighbor;
    });
    if (dup != adj.end()) {
      const Edge& e = g.edges_[std::next(dup)->edge];
      throw InvalidGraphError(Reason::DuplicateEdge,
                              "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  return g;
}

Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_list) {
  return build_graph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(), edge_list.size()));
}

std::vector<Component> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp_of(n, SIZE_MAX);
  std::vector<Component> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp_of[s] != SIZE_MAX) continue;
    const std::size_t c = out.size();
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp_of[s] = c;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      out[c].vertices.push_back(x);
      for (const auto& inc : g.incident(x)) {
        if (comp_of[inc.neighbor] == SIZE_MAX) {
          comp_of[inc.neighbor] = c;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(out[c].vertices.begin(), out[c].vertices.end());
  }
  for (const Edge& e : g.edges()) out[comp_of[e.u]].edges.push_back(e.id);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  InducedSubgraph sub;
  sub.parent_vertex.assign(vertices.begin(), vertices.end());
  std::sort(sub.parent_vertex.begin(), sub.parent_vertex.end());
  sub.parent_vertex.erase(std::unique(sub.parent_vertex.begin(), sub.parent_vertex.end()),
                          sub.parent_vertex.end());

  std::vector<std::optional<VertexId>> local(g.vertex_count());
  for (std::size_t i = 0; i < sub.parent_vertex.size(); ++i)
    local.at(sub.parent_vertex[i]) = static_cast<VertexId>(i);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) {
    if (local[e.u] && local[e.v]) {
      pairs.emplace_back(*local[e.u], *local[e.v]);
      sub.parent_edge.push_back(e.id);
    }
  }
  sub.graph = build_graph(sub.parent_vertex.size(), pairs);
  return sub;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (!dist[inc.neighbor]) {
        dist[inc.neighbor] = *dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

LevelStructure bfs_levels(const Graph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw InvalidGraphError(InvalidGraphError::Reason::EndpointOutOfRange,
                                         "root " + std::to_string(root) + " out of range");
  LevelStructure ls;
  ls.root = root;
  ls.level_of.assign(n, SIZE_MAX);
  ls.parent.assign(n, std::nullopt);
  ls.tree_edge.assign(n, std::nullopt);

  std::deque<VertexId> queue{root};
  ls.level_of[root] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    const std::size_t lvl = ls.level_of[x];
    if (ls.levels.size() <= lvl) ls.levels.resize(lvl + 1);
    ls.levels[lvl].push_back(x);
    for (const auto& inc : g.incident(x)) {
      if (ls.level_of[inc.neighbor] != SIZE_MAX) continue;
      ls.level_of[inc.neighbor] = lvl + 1;
      ls.parent[inc.neighbor] = x;
      ls.tree_edge[inc.neighbor] = inc.edge;
      queue.push_back(inc.neighbor);
      ++reached;
    }
  }
  if (reached != n)
    throw DisconnectedGraphError("graph is disconnected: " + std::to_string(n - reached) +
                                 " vertices unreachable from root " + std::to_string(root));
  return ls;
}

namespace {

void require_metric_input(const Graph& g) {
  if (g.vertex_count() == 0)
    throw InvalidGraphError(InvalidGraphError::Reason::EmptyGraph, "metric of the empty graph is undefined");
}

std::size_t eccentricity_unchecked(const Graph& g, VertexId v) {
  std::size_t ecc = 0;
  for (const auto& d : bfs_distances(g, v)) {
    if (!d) throw DisconnectedGraphError("eccentricity is undefined on a disconnected graph");
    ecc = std::max(ecc, *d);
  }
  return ecc;
}

}  // namespace

std::size_t eccentricity(const Graph& g, VertexId v) {
  require_metric_input(g);
  return eccentricity_unchecked(g, v);
}

Metrics graph_metrics(const Graph& g) {
  require_metric_input(g);
  Metrics m;
  m.eccentricities.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) m.eccentricities.push_back(eccentricity_unchecked(g, v));
  auto best = std::min_element(m.eccentricities.begin(), m.eccentricities.end());
  m.radius = {*best, static_cast<VertexId>(best - m.eccentricities.begin())};
  m.diameter = *std::max_element(m.eccentricities.begin(), m.eccentricities.end());
  return m;
}

Radius radius(const Graph& g) { return graph_metrics(g).radius; }

std::size_t diameter(const Graph& g) { return graph_metrics(g).diameter; }

}  // namespace antimagic
