#include "socsim/engine/grid.hpp"

#include <stdexcept>

namespace socsim {

GridWorld::GridWorld(int width, int height, Boundary boundary)
    : width_(width), height_(height), boundary_(boundary) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("grid dimensions must be at least 1x1");
    }
    cells_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
}

}  // namespace socsim
