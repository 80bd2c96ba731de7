#include "staging.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antimagic/errors.hpp"
#include "antimagic/euler_lemma.hpp"

namespace antimagic::detail {

PartialAssignment::PartialAssignment(const Graph& g)
    : g_(g), arcs_(g.edge_count()), oriented_(g.edge_count(), false), labeled_(g.edge_count(), false),
      sums_(g.vertex_count()) {}

void PartialAssignment::orient(EdgeId e, VertexId tail, VertexId head) {
  arcs_[e].tail = tail;
  arcs_[e].head = head;
  oriented_[e] = true;
}

void PartialAssignment::label(EdgeId e, Label value) {
  if (!oriented_[e] || labeled_[e]) throw Error("internal: edge " + std::to_string(e) + " labeled out of order");
  sums_[arcs_[e].head] += value;
  sums_[arcs_[e].tail] -= value;
  arcs_[e].label = std::move(value);
  labeled_[e] = true;
}

void PartialAssignment::label_level_subgraph(const LevelStructure& ls, std::size_t level, const LabelSet& block) {
  const InducedSubgraph sub = induced_subgraph(g_, ls.levels[level]);
  const Polarity polarity = level % 2 == 1 ? Polarity::Normal : Polarity::Reversed;
  const LabeledOrientation local = lemma_orient_label(sub.graph, block, polarity);
  for (EdgeId le = 0; le < local.arcs.size(); ++le) {
    const Arc& a = local.arcs[le];
    const EdgeId e = sub.parent_edge[le];
    orient(e, sub.parent_vertex[a.tail], sub.parent_vertex[a.head]);
    label(e, a.label);
  }
}

void PartialAssignment::orient_cross_edges(const LevelStructure& ls) {
  for (const Edge& e : g_.edges()) {
    const std::size_t lu = ls.level_of[e.u];
    const std::size_t lv = ls.level_of[e.v];
    if (lu == lv) continue;
    const VertexId deep = lu > lv ? e.u : e.v;
    const VertexId shallow = e.other(deep);
    if (std::max(lu, lv) % 2 == 1)
      orient(e.id, deep, shallow);
    else
      orient(e.id, shallow, deep);
  }
}

void PartialAssignment::assign_monotone(std::span<const VertexId> vertices, std::span<const EdgeId> edge_of,
                                        const LabelSet& block, EdgeRole role) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational& sa = sums_[vertices[a]];
    const Rational& sb = sums_[vertices[b]];
    if (sa != sb) return role == EdgeRole::Outgoing ? sa > sb : sa < sb;
    return vertices[a] < vertices[b];
  });
  for (std::size_t k = 0; k < order.size(); ++k) label(edge_of[order[k]], block[k]);
}

LabeledOrientation PartialAssignment::finish() const {
  for (EdgeId e = 0; e < labeled_.size(); ++e)
    if (!labeled_[e]) throw Error("internal: edge " + std::to_string(e) + " left unlabeled");
  return LabeledOrientation{arcs_};
}

std::vector<std::size_t> within_level_edge_counts(const Graph& g, const LevelStructure& ls) {
  std::vector<std::size_t> counts(ls.levels.size(), 0);
  for (const Edge& e : g.edges())
    if (ls.level_of[e.u] == ls.level_of[e.v]) ++counts[ls.level_of[e.u]];
  return counts;
}

}  // namespace antimagic::detail
