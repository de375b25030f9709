#include "socsim/engine/trace.hpp"

#include <stdexcept>
#include <utility>

namespace socsim {

char CellCoder::code(const CellContent& cell) const {
    switch (cell.kind) {
        case CellContent::Kind::empty:
            return empty;
        case CellContent::Kind::item:
            return item_codes.at(static_cast<std::size_t>(cell.type));
        case CellContent::Kind::agent:
            return agent_codes.at(static_cast<std::size_t>(cell.type));
    }
    throw std::logic_error("unreachable cell kind");
}

GridSnapshot snapshot_of(const GridWorld& world, const CellCoder& coder) {
    GridSnapshot snap{world.width(), world.height(), {}};
    snap.codes.reserve(world.cell_count());
    for (const CellContent& cell : world.cells()) {
        snap.codes.push_back(coder.code(cell));
    }
    return snap;
}

void Trace::record(std::int64_t tick, GridSnapshot snapshot, MetricMap metrics) {
    if (tick < 0 || (!entries_.empty() && tick <= entries_.back().tick)) {
        throw std::invalid_argument("trace order violation");
    }
    if (!entries_.empty() && (snapshot.width != entries_.front().snapshot.width ||
                              snapshot.height != entries_.front().snapshot.height)) {
        throw std::invalid_argument("trace snapshot dimensions changed");
    }
    entries_.push_back({tick, std::move(snapshot), std::move(metrics)});
}

Trace& record_snapshot(const GridWorld& world, std::int64_t tick, MetricMap metrics,
                       Trace& trace, const CellCoder& coder) {
    trace.record(tick, snapshot_of(world, coder), std::move(metrics));
    return trace;
}

}  // namespace socsim
