#include "antimagic/local_antimagic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antimagic/errors.hpp"
#include "staging.hpp"

namespace antimagic {

LabelPartition partition_labels(const LabelSet& labels, const LevelStructure& ls, const Graph& g) {
  if (labels.size() != g.edge_count())
    throw LabelError("label count " + std::to_string(labels.size()) + " does not match edge count " +
                     std::to_string(g.edge_count()));
  const auto within = detail::within_level_edge_counts(g, ls);
  const std::size_t inner = std::accumulate(within.begin(), within.end(), std::size_t{0});

  LabelPartition p;
  p.blocks.resize(ls.levels.size());
  p.blocks[0] = labels.slice(inner, labels.size() - inner);
  std::size_t offset = 0;
  for (std::size_t i = 1; i < within.size(); ++i) {
    p.blocks[i] = labels.slice(offset, within[i]);
    offset += within[i];
  }
  return p;
}

namespace {

// Connected graph with at least one edge.
LabeledOrientation construct_connected(const Graph& g, const LabelSet& labels, const LevelStructure& ls) {
  const LabelPartition partition = partition_labels(labels, ls, g);
  const LabelSet& cross = partition.cross();

  detail::PartialAssignment pa(g);
  for (std::size_t i = 1; i <= ls.depth(); ++i) pa.label_level_subgraph(ls, i, partition.blocks[i]);
  pa.orient_cross_edges(ls);

  std::size_t next = 0;
  for (const Edge& e : g.edges()) {
    if (ls.level_of[e.u] != ls.level_of[e.v] && !ls.is_tree_edge(e)) pa.label(e.id, cross[next++]);
  }

  for (std::size_t i = ls.depth(); i >= 1; --i) {
    const auto& level = ls.levels[i];
    std::vector<EdgeId> edge_of;
    edge_of.reserve(level.size());
    for (VertexId v : level) edge_of.push_back(*ls.tree_edge[v]);
    const auto role = i % 2 == 1 ? detail::EdgeRole::Outgoing : detail::EdgeRole::Incoming;
    pa.assign_monotone(level, edge_of, cross.slice(next, level.size()), role);
    next += level.size();
  }
  return pa.finish();
}

}  // namespace

LocalAntimagicResult construct_local_antimagic_traced(const Graph& g, const LabelSet& labels,
                                                      std::optional<VertexId> root) {
  if (labels.size() != g.edge_count())
    throw LabelError("label count " + std::to_string(labels.size()) + " does not match edge count " +
                     std::to_string(g.edge_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) throw IsolatedVertexError("vertex " + std::to_string(v) + " is isolated");

  LocalAntimagicResult result;
  result.assignment.arcs.resize(g.edge_count());
  result.level_of.assign(g.vertex_count(), 0);

  std::size_t offset = 0;
  for (const Component& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp.vertices);
    VertexId local_root = 0;
    if (root) {
      auto it = std::lower_bound(comp.vertices.begin(), comp.vertices.end(), *root);
      if (it != comp.vertices.end() && *it == *root) local_root = static_cast<VertexId>(it - comp.vertices.begin());
    }
    const LevelStructure ls = bfs_levels(sub.graph, local_root);
    const LabeledOrientation local =
        construct_connected(sub.graph, labels.slice(offset, comp.edges.size()), ls);
    offset += comp.edges.size();

    result.roots.push_back(sub.parent_vertex[local_root]);
    for (VertexId lv = 0; lv < sub.parent_vertex.size(); ++lv)
      result.level_of[sub.parent_vertex[lv]] = ls.level_of[lv];
    for (EdgeId le = 0; le < local.arcs.size(); ++le) {
      const Arc& a = local.arcs[le];
      result.assignment.arcs[sub.parent_edge[le]] =
          Arc{sub.parent_vertex[a.tail], sub.parent_vertex[a.head], a.label};
    }
  }
  return result;
}

LabeledOrientation construct_local_antimagic(const Graph& g, const LabelSet& labels, std::optional<VertexId> root) {
  return construct_local_antimagic_traced(g, labels, root).assignment;
}

LabeledOrientation construct_local_antimagic(const Graph& g) {
  return construct_local_antimagic(g, LabelSet::first_integers(g.edge_count()));
}

}  // namespace antimagic
