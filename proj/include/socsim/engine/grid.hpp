#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "socsim/engine/position.hpp"

namespace socsim {

enum class Boundary { toroidal, bounded };

// A cell holds exactly one of: nothing, an immobile item, or an agent.
// `type` is the model-declared category (item species, resident color,
// attitude, ...) and is meaningless for empty cells.
struct CellContent {
    enum class Kind : std::uint8_t { empty, item, agent };

    Kind kind = Kind::empty;
    int type = 0;

    static CellContent none() { return {}; }
    static CellContent item(int type) { return {Kind::item, type}; }
    static CellContent agent(int type) { return {Kind::agent, type}; }

    bool is_empty() const { return kind == Kind::empty; }
    bool is_item() const { return kind == Kind::item; }
    bool is_agent() const { return kind == Kind::agent; }

    friend bool operator==(const CellContent&, const CellContent&) = default;
};

// 2D lattice of cells with either toroidal or bounded edges.
class GridWorld {
public:
    GridWorld(int width, int height, Boundary boundary);

    int width() const { return width_; }
    int height() const { return height_; }
    Boundary boundary() const { return boundary_; }
    std::size_t cell_count() const { return cells_.size(); }

    bool contains(Position p) const {
        return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
    }

    std::size_t index_of(Position p) const {
        return static_cast<std::size_t>(p.y) * width_ + static_cast<std::size_t>(p.x);
    }
    Position position_of(std::size_t index) const {
        return {static_cast<int>(index % width_), static_cast<int>(index / width_)};
    }

    // Resolves arbitrary coordinates onto the torus.
    Position wrap(Position p) const {
        return {((p.x % width_) + width_) % width_, ((p.y % height_) + height_) % height_};
    }

    const CellContent& at(Position p) const { return cells_[index_of(p)]; }
    void set(Position p, CellContent c) { cells_[index_of(p)] = c; }

    const std::vector<CellContent>& cells() const { return cells_; }

    friend bool operator==(const GridWorld&, const GridWorld&) = default;

private:
    int width_;
    int height_;
    Boundary boundary_;
    std::vector<CellContent> cells_;
};

}  // namespace socsim
