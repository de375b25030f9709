#pragma once

namespace socsim {

struct Position {
    int x = 0;
    int y = 0;
    friend bool operator==(const Position&, const Position&) = default;
};

// Row-major ordering: scan rows top to bottom, columns left to right.
inline bool row_major_less(const Position& a, const Position& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace socsim
