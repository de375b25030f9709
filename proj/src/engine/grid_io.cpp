#include "socsim/engine/grid_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "socsim/engine/format.hpp"

namespace socsim {

void write_grid(std::ostream& os, const GridSnapshot& snapshot, std::int64_t tick) {
    os << "P-GRID " << format_int(snapshot.width) << ' ' << format_int(snapshot.height) << ' '
       << format_int(tick) << '\n';
    for (int y = 0; y < snapshot.height; ++y) {
        os.write(&snapshot.codes[static_cast<std::size_t>(y) * snapshot.width], snapshot.width);
        os.put('\n');
    }
}

ParsedGrid read_grid(std::istream& is) {
    std::string magic;
    ParsedGrid out;
    long long width = 0, height = 0, tick = 0;
    if (!(is >> magic >> width >> height >> tick) || magic != "P-GRID") {
        throw std::runtime_error("malformed grid header");
    }
    if (width < 1 || height < 1) throw std::runtime_error("malformed grid dimensions");
    is.ignore();  // trailing newline
    out.snapshot.width = static_cast<int>(width);
    out.snapshot.height = static_cast<int>(height);
    out.tick = tick;
    out.snapshot.codes.reserve(static_cast<std::size_t>(width * height));
    std::string line;
    for (long long y = 0; y < height; ++y) {
        if (!std::getline(is, line) || static_cast<long long>(line.size()) != width) {
            throw std::runtime_error("malformed grid row");
        }
        out.snapshot.codes.insert(out.snapshot.codes.end(), line.begin(), line.end());
    }
    return out;
}

}  // namespace socsim
