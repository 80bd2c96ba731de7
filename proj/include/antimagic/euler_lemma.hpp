#pragma once

#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic {

struct MultiEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  bool augmented;

  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Real edges keep their Graph ids 0..m-1; augmented edges follow as m..m+t-1.
// Parallel edges occur only when a real edge is doubled by an augmented one.
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<MultiEdge> edges;

  std::size_t real_edge_count() const;
};

// Pairs the odd-degree vertices (ascending) as (1st,2nd), (3rd,4th), ...
// so every degree becomes even.
Multigraph eulerize(const Graph& g);

struct CircuitStep {
  VertexId from;
  EdgeId edge;  // multigraph edge id
  VertexId to;
};

// Closed walk u1, e1, u2, ..., e_k, u1; steps[i] traverses e_{i+1}.
struct EulerCircuit {
  VertexId start = 0;
  std::vector<CircuitStep> steps;
};

// Hierholzer with first-gap splicing. The start is the smallest-id vertex
// incident to an augmented edge (then that edge is traversed first), else the
// smallest-id vertex with an edge. Each greedy step takes the smallest-id
// neighbor, ties by smallest edge id. Throws Error on odd degree and
// DisconnectedGraphError when the edges do not form one component.
EulerCircuit euler_circuit(const Multigraph& mg);

// Orientation and bijection onto `labels` such that every vertex sum is
// negative or at most the max label of its component's block (Normal), or
// positive or at least minus that max (Reversed). Components, in canonical
// order, receive contiguous ascending blocks of `labels`; inside a component
// the j-th real edge along its Euler circuit gets the j-th smallest label of
// the block. Also |outdeg - indeg| <= 1 everywhere. Isolated vertices get no
// arcs. Throws LabelError when |labels| != |E(g)|.
LabeledOrientation lemma_orient_label(const Graph& g, const LabelSet& labels, Polarity polarity);

}  // namespace antimagic
