#pragma once

#include <functional>
#include <string>
#include <vector>

#include "socsim/emergence/clusters.hpp"
#include "socsim/engine/grid.hpp"

namespace socsim::emergence {

enum class Tristate { yes, no, undefined };

// A property that can be asked of the cluster collection as a whole and of a
// single occupied cell. Component-level evaluators must return a defined
// value on single cells; collection-level ones are undefined there.
struct PropertyEvaluator {
    enum class Arity { component_level, collection_level };

    std::string name;
    Arity arity = Arity::collection_level;
    std::function<Tristate(const GridWorld&, const std::vector<Cluster>&)> on_aggregate;
    std::function<Tristate(const GridWorld&, Position)> on_component;
};

struct EmergenceVerdict {
    std::string property;
    bool holds_on_aggregate = false;
    bool defined_on_any_component = false;
    // True iff the property holds on the aggregate and is not true on any
    // individual occupied cell (undefined counts as not true).
    bool emergent = false;
};

EmergenceVerdict emergence_test(const PropertyEvaluator& evaluator, const GridWorld& world,
                                const std::vector<Cluster>& clusters);

// "contains >= N monochrome clusters of size >= S"; undefined on single cells.
PropertyEvaluator monochrome_clusters_property(std::size_t min_clusters, std::size_t min_size);

// Cell-content equality, e.g. "cell is black"; undefined on the aggregate.
PropertyEvaluator cell_content_property(std::string name, CellContent expected);

}  // namespace socsim::emergence
