#pragma once

#include "socsim/engine/grid.hpp"

namespace socsim::emergence {

// Mean of the same-type neighbor fraction over every agent cell that has at
// least one occupied moore-r1 neighbor. Throws "metric undefined" when no
// agent has occupied neighbors.
double mean_like_neighbor_fraction(const GridWorld& world);

// Shannon entropy of the item distribution over (w/block) x (h/block)
// blocks, normalized to [0, 1] by log(#blocks); a single block yields 0.
// The block side must divide both grid dimensions and at least one item
// must be on the grid.
double spatial_entropy(const GridWorld& world, int block);

}  // namespace socsim::emergence
