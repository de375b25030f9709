#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "socsim/engine/grid.hpp"
#include "socsim/engine/neighborhood.hpp"

namespace socsim::emergence {

// Maximal connected component of selected same-content cells: the unit
// macro-level structure formed by cell-to-cell adjacency.
struct Cluster {
    std::vector<Position> members;  // row-major sorted, non-empty
    int type = 0;
    // Arithmetic mean of member coordinates; no wrap correction on the torus.
    std::pair<double, double> centroid{0.0, 0.0};

    std::size_t size() const { return members.size(); }
};

using CellSelector = std::function<bool(const CellContent&)>;

// Partitions the selected cells into maximal components connected under the
// adjacency; only cells of identical content join, so clusters carry a
// single type. Output ordered by smallest row-major member.
std::vector<Cluster> detect_clusters(const GridWorld& world, const CellSelector& selector,
                                     const NeighborhoodSpec& adjacency);

}  // namespace socsim::emergence
