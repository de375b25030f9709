#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "socsim/emergence/clusters.hpp"

namespace socsim::emergence {

// One level of the structure hierarchy. Level 2 structures each wrap one
// cluster; a level k+1 structure groups the level-k structures (by index)
// whose centroids chain within the level's linking threshold.
struct StructureLevel {
    struct Structure {
        std::vector<std::size_t> members;  // indices into the previous level
        std::pair<double, double> centroid{0.0, 0.0};
    };

    int level = 2;
    std::vector<Structure> structures;
};

// Builds levels 2..max_level. Level k+1 joins level-k structures whose
// centroid distance is at most linking_distance * (k - 1); centroids of
// grouped structures are the mean of their members' centroids. Stops early
// once a level collapses to a single structure.
std::vector<StructureLevel> build_hyperstructure(const std::vector<Cluster>& clusters,
                                                 double linking_distance, int max_level);

}  // namespace socsim::emergence
