#pragma once

#include <cstdint>
#include <random>

#include "antimagic/graph.hpp"
#include "antimagic/labels.hpp"

namespace antimagic::testing {

using Rng = std::mt19937_64;

// Random spanning tree on a shuffled vertex order plus each remaining pair
// independently with probability `extra_density`.
Graph random_connected_graph(Rng& rng, std::size_t n, double extra_density);

// Random graph with diameter <= 2 (rejection sampling over G(n, p)).
Graph random_diameter2_graph(Rng& rng, std::size_t n);

// m distinct positive rationals with small numerators and denominators.
LabelSet random_rational_labels(Rng& rng, std::size_t m);

}  // namespace antimagic::testing
