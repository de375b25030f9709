#include "socsim/engine/neighborhood.hpp"

#include <algorithm>
#include <cstdlib>

namespace socsim {

void neighborhood(const GridWorld& world, Position pos, const NeighborhoodSpec& spec,
                  std::vector<Position>& out) {
    out.clear();
    const int r = spec.radius;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (spec.kind == NeighborhoodSpec::Kind::von_neumann &&
                std::abs(dx) + std::abs(dy) > r) {
                continue;
            }
            Position q{pos.x + dx, pos.y + dy};
            if (world.boundary() == Boundary::toroidal) {
                q = world.wrap(q);
                if (q == pos) continue;  // wrapped back onto the origin on tiny grids
            } else if (!world.contains(q)) {
                continue;
            }
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end(), row_major_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::vector<Position> neighborhood(const GridWorld& world, Position pos,
                                   const NeighborhoodSpec& spec) {
    std::vector<Position> out;
    neighborhood(world, pos, spec, out);
    return out;
}

}  // namespace socsim
