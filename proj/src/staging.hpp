#pragma once

// Shared machinery for the level-by-level constructions: an assignment under
// construction with running partial vertex sums.

#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic::detail {

enum class EdgeRole { Outgoing, Incoming };

class PartialAssignment {
 public:
  explicit PartialAssignment(const Graph& g);

  void orient(EdgeId e, VertexId tail, VertexId head);
  void label(EdgeId e, Label value);

  bool is_labeled(EdgeId e) const { return labeled_[e]; }
  const Arc& arc(EdgeId e) const { return arcs_[e]; }
  const Rational& partial_sum(VertexId v) const { return sums_[v]; }

  // Lemma labeling of G[level], polarity Normal for odd levels and Reversed for even.
  void label_level_subgraph(const LevelStructure& ls, std::size_t level, const LabelSet& block);

  // Cross edges between levels i-1 and i point from V_i to V_{i-1} for odd i
  // and from V_{i-1} to V_i for even i.
  void orient_cross_edges(const LevelStructure& ls);

  // Gives each vertex's still-unlabeled edge a label from `block` (ascending)
  // so the resulting sums are pairwise distinct. With Outgoing edges a larger
  // partial sum gets a smaller label; with Incoming the smaller partial sum
  // does. Ties go to the smaller vertex id.
  void assign_monotone(std::span<const VertexId> vertices, std::span<const EdgeId> edge_of,
                       const LabelSet& block, EdgeRole role);

  LabeledOrientation finish() const;

 private:
  const Graph& g_;
  std::vector<Arc> arcs_;
  std::vector<bool> oriented_;
  std::vector<bool> labeled_;
  std::vector<Rational> sums_;
};

// Within-level edge count per level, index 0..depth.
std::vector<std::size_t> within_level_edge_counts(const Graph& g, const LevelStructure& ls);

}  // namespace antimagic::detail
