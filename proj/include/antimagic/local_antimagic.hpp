#pragma once

#include <optional>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic {

// blocks[0] holds the labels for edges between levels; blocks[i], i >= 1,
// the labels for edges inside level i. Every label of blocks[0] exceeds every
// label of the other blocks.
struct LabelPartition {
  std::vector<LabelSet> blocks;

  const LabelSet& cross() const { return blocks.front(); }
  friend bool operator==(const LabelPartition&, const LabelPartition&) = default;
};

// The largest labels go to cross-level edges; the rest are split into
// contiguous ascending blocks for levels 1..d in order.
LabelPartition partition_labels(const LabelSet& labels, const LevelStructure& ls, const Graph& g);

struct LocalAntimagicResult {
  LabeledOrientation assignment;
  std::vector<VertexId> roots;         // one per component, canonical order
  std::vector<std::size_t> level_of;   // BFS level inside the vertex's component
};

// Orientation plus bijection onto `labels` under which adjacent vertices have
// distinct sums: vertices on odd BFS levels get negative sums, vertices on
// even levels (roots included) positive ones. Each component uses `root` if it
// lies there, else its smallest vertex.
//
// Throws IsolatedVertexError, or LabelError on a size mismatch.
LocalAntimagicResult construct_local_antimagic_traced(const Graph& g, const LabelSet& labels,
                                                      std::optional<VertexId> root = std::nullopt);

LabeledOrientation construct_local_antimagic(const Graph& g, const LabelSet& labels,
                                             std::optional<VertexId> root = std::nullopt);

// Labels {1, ..., m}.
LabeledOrientation construct_local_antimagic(const Graph& g);

}  // namespace antimagic
