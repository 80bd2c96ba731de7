#include "antimagic/radius2.hpp"

#include <algorithm>
#include <string>

#include "antimagic/errors.hpp"
#include "antimagic/local_antimagic.hpp"
#include "staging.hpp"

namespace antimagic {

Radius2Construction construct_antimagic_radius2_traced(const Graph& g, const LabelSet& labels) {
  if (labels.size() != g.edge_count())
    throw LabelError("label count " + std::to_string(labels.size()) + " does not match edge count " +
                     std::to_string(g.edge_count()));
  const Radius r = radius(g);
  if (r.value > 2) throw RadiusTooLargeError("graph radius " + std::to_string(r.value) + " exceeds 2");

  Radius2Construction out;
  out.levels = bfs_levels(g, r.center);
  const LevelStructure& ls = out.levels;
  if (ls.depth() == 0) return out;

  if (ls.depth() == 1) {
    // Every cross edge is a tree edge into the root; this is the level-1 stage alone.
    out.result = construct_local_antimagic(g, labels, r.center);
    out.before_rearrangement = out.result;
    return out;
  }

  const LabelPartition partition = partition_labels(labels, ls, g);
  const LabelSet& cross = partition.cross();
  const VertexId u = ls.root;
  const auto& v1 = ls.levels[1];
  const auto& v2 = ls.levels[2];

  detail::PartialAssignment pa(g);
  pa.label_level_subgraph(ls, 1, partition.blocks[1]);
  pa.label_level_subgraph(ls, 2, partition.blocks[2]);
  pa.orient_cross_edges(ls);

  std::size_t next = 0;
  for (const Edge& e : g.edges())
    if (ls.level_of[e.u] != ls.level_of[e.v] && !ls.is_tree_edge(e)) pa.label(e.id, cross[next++]);

  // Root edges in ascending endpoint order; the one to the smallest V1 vertex waits.
  std::vector<VertexId> v1_sorted(v1.begin(), v1.end());
  std::sort(v1_sorted.begin(), v1_sorted.end());
  const EdgeId root_edge = *ls.tree_edge[v1_sorted.front()];
  for (std::size_t k = 1; k < v1_sorted.size(); ++k) pa.label(*ls.tree_edge[v1_sorted[k]], cross[next++]);

  std::vector<VertexId> stage{u};
  std::vector<EdgeId> stage_edges{root_edge};
  for (VertexId v : v2) {
    stage.push_back(v);
    stage_edges.push_back(*ls.tree_edge[v]);
  }
  pa.assign_monotone(stage, stage_edges, cross.slice(next, stage.size()), detail::EdgeRole::Incoming);
  out.before_rearrangement = pa.finish();

  // Redistribute the root-edge labels against the V1 sums that exclude them.
  detail::PartialAssignment re(g);
  std::vector<Label> root_labels;
  for (const Edge& e : g.edges()) {
    const Arc& a = out.before_rearrangement.arcs[e.id];
    re.orient(e.id, a.tail, a.head);
    if (e.u == u || e.v == u)
      root_labels.push_back(a.label);
    else
      re.label(e.id, a.label);
  }
  std::vector<EdgeId> v1_edges;
  for (VertexId v : v1_sorted) v1_edges.push_back(*ls.tree_edge[v]);
  re.assign_monotone(v1_sorted, v1_edges, LabelSet(std::move(root_labels)), detail::EdgeRole::Outgoing);
  out.result = re.finish();
  return out;
}

LabeledOrientation construct_antimagic_radius2(const Graph& g, const LabelSet& labels) {
  return construct_antimagic_radius2_traced(g, labels).result;
}

LabeledOrientation construct_antimagic_integer(const Graph& g) {
  return construct_antimagic_radius2(g, LabelSet::first_integers(g.edge_count()));
}

}  // namespace antimagic
