#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "socsim/engine/grid.hpp"
#include "socsim/engine/rng.hpp"
#include "socsim/engine/trace.hpp"

namespace socsim::ant {

struct AntParams {
    int width = 50;
    int height = 50;
    Boundary boundary = Boundary::toroidal;
    double k1 = 0.1;  // pickup threshold constant, > 0
    double k2 = 0.3;  // drop threshold constant, > 0
    int memory_length = 50;  // perception window T, in ticks
    int n_ants = 10;
    int item_types = 1;
    int items_per_type = 200;
    int entropy_block = 10;  // block side for the spatial entropy metric

    friend bool operator==(const AntParams&, const AntParams&) = default;
};

// Per-item-type ring buffer of the last T single-cell perception bits.
// Perception is the occupancy of the one cell entered each tick, so the
// maximum number of sightings over the window is T.
class PerceptionMemory {
public:
    PerceptionMemory(int item_types, int window);

    // Records one tick's perception: the item type underfoot, if any.
    void observe(std::optional<int> item_type);

    // Sightings of the type over the window divided by the window length.
    // Slots not yet filled count as empty.
    double fraction(int item_type) const;

    int window() const { return window_; }

private:
    int types_;
    int window_;
    int cursor_ = 0;
    std::vector<std::uint8_t> bits_;  // types_ x window_
    std::vector<int> counts_;
};

struct AntState {
    Position pos;
    std::optional<int> carrying;
    PerceptionMemory memory;
};

// p = (k1 / (k1 + f))^2, strictly decreasing in f; 1 at f = 0.
double pickup_probability(double f, double k1);
// p = (f / (k2 + f))^2, strictly increasing in f; 0 at f = 0.
double drop_probability(double f, double k2);

// One ant action: move to a uniformly chosen moore-r1 neighbor, perceive the
// entered cell, then try to pick up (unladen, item underfoot) or drop (laden,
// cell free). The pickup/drop decision uses the perception window up to but
// not including the entered cell, so a fresh ant always lifts the first item
// it meets. Items never block movement and ants may share cells.
void ant_tick(GridWorld& world, AntState& ant, const AntParams& params, RngStream& rng);

// Snapshot coding: '.' empty, items 'A'.., 'a' ant on empty, '*' ant on item.
GridSnapshot render_ants(const GridWorld& world, const std::vector<AntState>& ants);

// A full simulation instance: items scattered on distinct cells, ants placed
// uniformly, activated in a fresh random permutation each tick.
class AntSim {
public:
    AntSim(const AntParams& params, std::uint64_t seed);

    void tick();
    std::int64_t current_tick() const { return tick_; }

    const AntParams& params() const { return params_; }
    const GridWorld& world() const { return world_; }
    const std::vector<AntState>& ants() const { return ants_; }

    int on_grid_count(int item_type) const;
    int carried_count(int item_type) const;

    GridSnapshot render() const { return render_ants(world_, ants_); }
    // cluster_count, largest_cluster_fraction, spatial_entropy
    MetricMap metrics() const;

private:
    AntParams params_;
    GridWorld world_;
    RngStream rng_;
    std::vector<AntState> ants_;
    std::int64_t tick_ = 0;
};

// Runs the model and records snapshots plus metrics at every tick divisible
// by snapshot_every (including tick 0).
Trace run_ant_model(const AntParams& params, std::uint64_t seed, std::int64_t ticks,
                    std::int64_t snapshot_every);

}  // namespace socsim::ant
