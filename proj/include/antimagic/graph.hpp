#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace antimagic {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph with dense vertex ids 0..n-1 and edge ids 0..m-1
// in insertion order. Adjacency lists are sorted by neighbor id; every
// traversal in the library walks them in that order.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  // Edge id joining u and v, if any. O(log deg).
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>);

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Throws InvalidGraphError on self-loops, duplicate pairs or out-of-range endpoints.
Graph build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_list);
Graph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_list);

struct Component {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
};

// Ordered by smallest contained vertex id.
std::vector<Component> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// A subgraph re-indexed onto dense ids. Relative order of vertex and edge ids
// is preserved, so canonical tie-breaking inside the subgraph agrees with the
// parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> parent_vertex;  // local -> parent
  std::vector<EdgeId> parent_edge;      // local -> parent
};

// `vertices` need not be sorted; duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

struct LevelStructure {
  VertexId root = 0;
  std::vector<std::size_t> level_of;
  std::vector<std::vector<VertexId>> levels;  // levels[0] == {root}; each in discovery order
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::optional<EdgeId>> tree_edge;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  bool is_tree_edge(const Edge& e) const {
    return tree_edge[e.u] == e.id || tree_edge[e.v] == e.id;
  }

  friend bool operator==(const LevelStructure&, const LevelStructure&) = default;
};

// Canonical BFS: FIFO queue, neighbors in ascending id, parent = first discoverer.
// Throws DisconnectedGraphError if some vertex is unreachable from root.
LevelStructure bfs_levels(const Graph& g, VertexId root);

// Distances from source; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source);

// Metric operations throw DisconnectedGraphError on disconnected input and
// InvalidGraphError on the empty graph.
std::size_t eccentricity(const Graph& g, VertexId v);

struct Radius {
  std::size_t value;
  VertexId center;  // smallest id among minimum-eccentricity vertices
};
Radius radius(const Graph& g);
std::size_t diameter(const Graph& g);

struct Metrics {
  std::vector<std::size_t> eccentricities;
  Radius radius;
  std::size_t diameter;
};
// All eccentricities from one all-pairs BFS sweep.
Metrics graph_metrics(const Graph& g);

}  // namespace antimagic
