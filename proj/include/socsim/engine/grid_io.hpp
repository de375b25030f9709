#pragma once

#include <cstdint>
#include <iosfwd>

#include "socsim/engine/trace.hpp"

namespace socsim {

// Plain-text grid format, bit-exact across platforms (LF line endings):
//   P-GRID <width> <height> <tick>
//   <one row of cell codes per line>
void write_grid(std::ostream& os, const GridSnapshot& snapshot, std::int64_t tick);

struct ParsedGrid {
    GridSnapshot snapshot;
    std::int64_t tick = 0;
};

ParsedGrid read_grid(std::istream& is);

}  // namespace socsim
