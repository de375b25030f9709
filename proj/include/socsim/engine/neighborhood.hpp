#pragma once

#include <vector>

#include "socsim/engine/grid.hpp"

namespace socsim {

struct NeighborhoodSpec {
    enum class Kind { moore, von_neumann };

    Kind kind = Kind::moore;
    int radius = 1;
};

inline constexpr NeighborhoodSpec moore1{NeighborhoodSpec::Kind::moore, 1};
inline constexpr NeighborhoodSpec von_neumann1{NeighborhoodSpec::Kind::von_neumann, 1};

// All distinct positions within Chebyshev (moore) or Manhattan (von Neumann)
// distance <= radius of pos, excluding pos itself. Toroidal grids wrap
// coordinates, bounded grids clip them. On grids with a dimension <= 2*radius
// the wrapped offsets collide and are deduplicated, so neighbor counts shrink.
// Output order is row-major by resolved coordinates.
void neighborhood(const GridWorld& world, Position pos, const NeighborhoodSpec& spec,
                  std::vector<Position>& out);
std::vector<Position> neighborhood(const GridWorld& world, Position pos,
                                   const NeighborhoodSpec& spec);

}  // namespace socsim
