#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "socsim/engine/grid.hpp"

namespace socsim {

// Character-coded copy of a world's cells, one code per cell.
struct GridSnapshot {
    int width = 0;
    int height = 0;
    std::vector<char> codes;

    char at(int x, int y) const {
        return codes[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)];
    }
    char& at(int x, int y) {
        return codes[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)];
    }

    friend bool operator==(const GridSnapshot&, const GridSnapshot&) = default;
};

// Maps cell contents to display characters. Models override the code tables;
// the engine default uses '.' empty, 'A'.. for items, 'a'.. for agents.
struct CellCoder {
    char empty = '.';
    std::string item_codes = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::string agent_codes = "abcdefghijklmnopqrstuvwxyz";

    char code(const CellContent& cell) const;
};

GridSnapshot snapshot_of(const GridWorld& world, const CellCoder& coder = {});

using MetricMap = std::map<std::string, double>;

struct TraceEntry {
    std::int64_t tick = 0;
    GridSnapshot snapshot;
    MetricMap metrics;
};

// Append-only record of a run. Ticks increase strictly and snapshot
// dimensions stay constant; entries never alias live world state.
class Trace {
public:
    void record(std::int64_t tick, GridSnapshot snapshot, MetricMap metrics);

    const std::vector<TraceEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const TraceEntry& front() const { return entries_.front(); }
    const TraceEntry& back() const { return entries_.back(); }

private:
    std::vector<TraceEntry> entries_;
};

// Appends a deep copy of the world's cells plus metrics to the trace.
Trace& record_snapshot(const GridWorld& world, std::int64_t tick, MetricMap metrics,
                       Trace& trace, const CellCoder& coder = {});

}  // namespace socsim
