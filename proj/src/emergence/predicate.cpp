#include "socsim/emergence/predicate.hpp"

#include <utility>

#include "socsim/engine/format.hpp"

namespace socsim::emergence {

EmergenceVerdict emergence_test(const PropertyEvaluator& evaluator, const GridWorld& world,
                                const std::vector<Cluster>& clusters) {
    EmergenceVerdict verdict;
    verdict.property = evaluator.name;
    verdict.holds_on_aggregate =
        evaluator.on_aggregate && evaluator.on_aggregate(world, clusters) == Tristate::yes;

    bool any_true = false;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (world.cells()[i].is_empty()) continue;
        const Tristate t = evaluator.on_component
                               ? evaluator.on_component(world, world.position_of(i))
                               : Tristate::undefined;
        if (t != Tristate::undefined) verdict.defined_on_any_component = true;
        if (t == Tristate::yes) any_true = true;
    }
    verdict.emergent = verdict.holds_on_aggregate && !any_true;
    return verdict;
}

PropertyEvaluator monochrome_clusters_property(std::size_t min_clusters, std::size_t min_size) {
    PropertyEvaluator p;
    p.name = "contains >= " + format_uint(min_clusters) + " monochrome clusters of size >= " +
             format_uint(min_size);
    p.arity = PropertyEvaluator::Arity::collection_level;
    p.on_aggregate = [min_clusters, min_size](const GridWorld&,
                                              const std::vector<Cluster>& clusters) {
        std::size_t qualifying = 0;
        for (const Cluster& c : clusters) {
            if (c.size() >= min_size) ++qualifying;
        }
        return qualifying >= min_clusters ? Tristate::yes : Tristate::no;
    };
    p.on_component = [](const GridWorld&, Position) { return Tristate::undefined; };
    return p;
}

PropertyEvaluator cell_content_property(std::string name, CellContent expected) {
    PropertyEvaluator p;
    p.name = std::move(name);
    p.arity = PropertyEvaluator::Arity::component_level;
    p.on_aggregate = [](const GridWorld&, const std::vector<Cluster>&) {
        return Tristate::undefined;
    };
    p.on_component = [expected](const GridWorld& world, Position pos) {
        return world.at(pos) == expected ? Tristate::yes : Tristate::no;
    };
    return p;
}

}  // namespace socsim::emergence
