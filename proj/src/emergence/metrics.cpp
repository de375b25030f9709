#include "socsim/emergence/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "socsim/schelling/model.hpp"

namespace socsim::emergence {

double mean_like_neighbor_fraction(const GridWorld& world) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (!world.cells()[i].is_agent()) continue;
        const auto lf = schelling::like_fraction(world, world.position_of(i));
        if (lf.fraction) {
            sum += *lf.fraction;
            ++counted;
        }
    }
    if (counted == 0) throw std::invalid_argument("metric undefined");
    return sum / static_cast<double>(counted);
}

double spatial_entropy(const GridWorld& world, int block) {
    if (block < 1 || world.width() % block != 0 || world.height() % block != 0) {
        throw std::invalid_argument("block side must divide both grid dimensions");
    }
    const int bx = world.width() / block;
    const int by = world.height() / block;
    std::vector<double> counts(static_cast<std::size_t>(bx) * by, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < world.cell_count(); ++i) {
        if (!world.cells()[i].is_item()) continue;
        const Position p = world.position_of(i);
        counts[static_cast<std::size_t>(p.y / block) * bx + p.x / block] += 1.0;
        total += 1.0;
    }
    if (total == 0.0) throw std::invalid_argument("spatial entropy undefined for zero items");
    if (counts.size() == 1) return 0.0;
    double h = 0.0;
    for (const double c : counts) {
        if (c == 0.0) continue;  // 0 * log 0 = 0
        const double q = c / total;
        h -= q * std::log(q);
    }
    return h / std::log(static_cast<double>(counts.size()));
}

}  // namespace socsim::emergence
