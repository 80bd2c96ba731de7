#pragma once

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic {

struct Radius2Construction {
  LevelStructure levels;                      // rooted at the smallest-id center
  LabeledOrientation before_rearrangement;    // equals `result` when depth < 2
  LabeledOrientation result;
};

// For connected graphs of radius at most 2: orientation plus bijection onto
// `labels` with all vertex sums pairwise distinct. Sums on levels 0 and 2 are
// positive, sums on level 1 negative.
//
// Throws DisconnectedGraphError, RadiusTooLargeError, or LabelError.
Radius2Construction construct_antimagic_radius2_traced(const Graph& g, const LabelSet& labels);

LabeledOrientation construct_antimagic_radius2(const Graph& g, const LabelSet& labels);

// Labels {1, ..., m}: an antimagic orientation in the classical sense.
LabeledOrientation construct_antimagic_integer(const Graph& g);

}  // namespace antimagic
